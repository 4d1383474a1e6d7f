#include "sptok/io.hpp"

#include <algorithm>
#include <sstream>

#include "sptok/error.hpp"

namespace sptok::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

std::string cpm_xy_name(CpmXyWeighting w) { return w == CpmXyWeighting::Standard ? "standard" : "alternative"; }
std::string cpm_q_name(CpmQWeighting w) { return w == CpmQWeighting::Plain ? "plain" : "normalised"; }

Entry entry_from_json(const json& j) {
  if (j.is_string()) return parse_entry(j.get<std::string>());
  if (!j.is_object() || !j.contains("level")) bad("entry must be an object with a level");
  const int level = j.at("level").get<int>();
  if (level < 1 || level > 100) bad("entry level out of range: " + std::to_string(level));
  const bool barred = j.value("barred", false);
  const bool primed = j.value("primed", false);
  return {barred ? Letter::barred(level) : Letter::unbarred(level), primed};
}

bool is_entry(const json& j) { return j.is_object() || j.is_string(); }

std::vector<std::vector<Entry>> entry_rows(const json& rows) {
  if (!rows.is_array()) bad("rows must be an array");
  std::vector<std::vector<Entry>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) bad("each row must be an array");
    auto& row = out.emplace_back();
    for (const auto& e : r) row.push_back(entry_from_json(e));
  }
  return out;
}

std::vector<int> row_lengths(const std::vector<std::vector<Entry>>& rows) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  return lens;
}

void check_shape(const json& j, const std::vector<int>& lens) {
  if (!j.contains("shape")) return;
  auto shape = j.at("shape").get<std::vector<int>>();
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape != lens) bad("shape does not match the row lengths");
}

AnyObject tableau_from_json(const json& j, std::string kind) {
  const auto rows = entry_rows(j.at("rows"));
  const auto lens = row_lengths(rows);
  check_shape(j, lens);
  if (std::any_of(lens.begin(), lens.end(), [](int l) { return l == 0; })) bad("tableau rows must be nonempty");
  bool any_primed = false;
  int max_level = 0;
  for (const auto& r : rows)
    for (const auto& e : r) {
      any_primed = any_primed || e.primed;
      max_level = std::max(max_level, e.letter.level());
    }
  auto letters = [&] {
    std::vector<std::vector<Letter>> out;
    for (const auto& r : rows) {
      auto& row = out.emplace_back();
      for (const auto& e : r) row.push_back(e.letter);
    }
    return out;
  };
  if (kind.empty()) {
    if (any_primed) {
      kind = "qt";
    } else {
      kind = "t";
      if (std::adjacent_find(lens.begin(), lens.end(), std::less_equal<>()) == lens.end()) {
        const int n = static_cast<int>(rows.size());
        ShiftedTableau st{n, StrictPartition(lens), letters()};
        if (max_level <= n && validate(st).ok()) kind = "st";
      }
    }
  }
  try {
    if (kind == "t") {
      const int n = j.value("n", std::max(max_level, static_cast<int>(rows.size())));
      return SymplecticTableau{n, Partition(lens), letters()};
    }
    if (kind != "st" && kind != "qt") bad("unknown tableau kind '" + kind + "'");
    const int n = j.value("n", static_cast<int>(rows.size()));
    if (n != static_cast<int>(rows.size())) bad("a shifted tableau of rank n needs n rows");
    ShiftedTableau st{n, StrictPartition(lens), letters()};
    if (kind == "st") {
      if (any_primed) bad("primes are only allowed in a qt tableau");
      return st;
    }
    PrimedShiftedTableau qt{std::move(st), {}};
    for (const auto& r : rows) {
      auto& row = qt.primed.emplace_back();
      for (const auto& e : r) row.push_back(e.primed);
    }
    return qt;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    bad(e.what());
  }
}

AnyObject matrix_from_json(const json& rows, std::string kind) {
  if (!rows.is_array() || rows.empty()) bad("matrix must be a nonempty array of rows");
  if (rows.size() % 2 != 0) bad("matrix needs an even number of rows");
  const int n = static_cast<int>(rows.size()) / 2;
  if (kind.empty()) {
    const json* first = nullptr;
    for (const auto& r : rows) {
      if (!r.is_array()) bad("each matrix row must be an array");
      if (!r.empty()) {
        first = &r[0];
        break;
      }
    }
    kind = first != nullptr && first->is_string() ? "cpm" : "uasm";
  }
  if (kind == "uasm") {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) {
      auto& row = v.emplace_back();
      for (const auto& x : r) {
        if (!x.is_number_integer()) bad("UASM entries must be integers");
        const long long e = x.get<long long>();
        if (e < -1 || e > 1) bad("UASM entries must be -1, 0 or 1");
        row.push_back(static_cast<int>(e));
      }
    }
    try {
      return UTurnASM{n, IntMatrix::from_rows(v)};
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (kind != "cpm") bad("unknown matrix kind '" + kind + "'");
  CompassPointMatrix c{n, 0, {}};
  for (const auto& r : rows) {
    auto& row = c.rows.emplace_back();
    for (const auto& x : r) {
      if (!x.is_string()) bad("CPM entries must be two-letter codes");
      row.push_back(parse_compass(x.get<std::string>()));
    }
  }
  c.m = static_cast<int>(c.rows.front().size());
  for (const auto& r : c.rows)
    if (static_cast<int>(r.size()) != c.m) bad("CPM rows differ in length");
  return c;
}

AnyObject gtp_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (rows.empty() || rows.size() % 2 != 0) bad("a GT pattern needs 2n rows");
  const int n = j.value("n", static_cast<int>(rows.size()) / 2);
  if (static_cast<int>(rows.size()) != 2 * n) bad("a GT pattern of rank n needs 2n rows");
  for (int r = 0; r < 2 * n; ++r)
    if (static_cast<int>(rows[r].size()) != r / 2 + 1)
      bad("GT row " + std::to_string(r + 1) + " must have " + std::to_string(r / 2 + 1) + " entries");
  return SympGTPattern{n, rows};
}

template <class Cells>
std::string shifted_layout(const Cells& rows, const std::vector<std::vector<std::string>>& text) {
  (void)rows;
  std::size_t w = 1;
  for (const auto& r : text)
    for (const auto& s : r) w = std::max(w, s.size());
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::string line(i * (w + 1), ' ');
    for (std::size_t c = 0; c < text[i].size(); ++c) {
      if (c) line += ' ';
      line += text[i][c] + std::string(w - text[i][c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string bracketed(const std::vector<std::vector<std::string>>& cells) {
  std::size_t w = 1;
  std::size_t lw = 1;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    lw = std::max(lw, to_string(Letter::from_ordinal(static_cast<int>(r))).size());
    for (const auto& s : cells[r]) w = std::max(w, s.size());
  }
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string label = to_string(Letter::from_ordinal(static_cast<int>(r)));
    std::string line = label + std::string(lw - label.size(), ' ') + " [";
    for (const auto& s : cells[r]) line += ' ' + std::string(w - s.size(), ' ') + s;
    out += line + " ]\n";
  }
  return out;
}

std::vector<std::vector<std::string>> letter_text(const std::vector<std::vector<Letter>>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    auto& row = out.emplace_back();
    for (Letter l : r) row.push_back(to_string(l));
  }
  return out;
}

}  // namespace

std::string kind_of(const AnyObject& obj) {
  static const char* names[] = {"t", "st", "qt", "uasm", "cpm", "gtp"};
  return names[obj.index()];
}

json to_json(Letter l, bool primed) {
  return json{{"level", l.level()}, {"barred", l.is_barred()}, {"primed", primed}};
}

json to_json(const SymplecticTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (Letter l : r) row.push_back(to_json(l));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "t"}, {"n", t.n}, {"shape", t.shape.parts()}, {"rows", std::move(rows)}};
}

json to_json(const ShiftedTableau& st) {
  json rows = json::array();
  for (const auto& r : st.rows) {
    json row = json::array();
    for (Letter l : r) row.push_back(to_json(l));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "st"}, {"n", st.n}, {"shape", st.shape.parts()}, {"rows", std::move(rows)}};
}

json to_json(const PrimedShiftedTableau& qt) {
  json rows = json::array();
  for (std::size_t i = 0; i < qt.base.rows.size(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < qt.base.rows[i].size(); ++c) row.push_back(to_json(qt.base.rows[i][c], qt.primed[i][c]));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "qt"}, {"n", qt.base.n}, {"shape", qt.base.shape.parts()}, {"rows", std::move(rows)}};
}

json to_json(const UTurnASM& a) { return a.a.to_rows(); }

json to_json(const CompassPointMatrix& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    json row = json::array();
    for (Compass x : r) row.push_back(std::string(to_string(x)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SympGTPattern& g) { return json{{"kind", "gtp"}, {"n", g.n}, {"rows", g.rows}}; }

json to_json(const AnyObject& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

AnyObject object_from_json(const json& j) {
  try {
    if (j.is_array()) return matrix_from_json(j, "");
    if (!j.is_object()) bad("expected a JSON object or array");
    const std::string kind = j.value("kind", "");
    if (kind == "uasm" || kind == "cpm") return matrix_from_json(j.at("rows"), kind);
    if (kind == "gtp") return gtp_from_json(j);
    if (!j.contains("rows")) bad("object has no rows");
    if (!kind.empty()) return tableau_from_json(j, kind);
    const json& rows = j.at("rows");
    if (!rows.is_array()) bad("rows must be an array");
    for (const auto& r : rows) {
      if (!r.is_array() || r.empty()) continue;
      if (r[0].is_number()) return gtp_from_json(j);
      if (is_entry(r[0])) return tableau_from_json(j, "");
      bad("unrecognised row contents");
    }
    bad("cannot tell the object kind from empty rows");
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

AnyObject parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(e.what());
  }
  return object_from_json(j);
}

json to_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["identity"] = std::string(to_string(r.identity));
  j["n"] = r.n;
  j["mu"] = r.mu.parts();
  j["lambda"] = r.lambda.parts();
  j["mode"] = std::string(to_string(r.mode));
  json counts;
  counts["objects"] = r.objects;
  counts["lhsTerms"] = r.lhs_terms ? json(*r.lhs_terms) : json(nullptr);
  counts["rhsTerms"] = r.rhs_terms ? json(*r.rhs_terms) : json(nullptr);
  j["counts"] = counts;
  j["equal"] = r.equal;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    json cx;
    if (r.mode == Mode::Symbolic) {
      cx["monomial"] = c.monomial;
      cx["lhs"] = c.lhs_coeff;
      cx["rhs"] = c.rhs_coeff;
    } else {
      cx["lane"] = c.lane;
      json point = json::object();
      for (const auto& [v, value] : c.point) point[to_string(v)] = value;
      cx["point"] = point;
      cx["lhs"] = c.lhs_value;
      cx["rhs"] = c.rhs_value;
    }
    j["counterexample"] = cx;
  }
  j["accumulation"] = std::string(to_string(r.accumulation));
  j["variants"] = json{{"cpmXy", cpm_xy_name(r.variants.cpm_xy)},
                       {"cpmQ", cpm_q_name(r.variants.cpm_q)},
                       {"c0", std::string(to_string(r.variants.c0))},
                       {"qNeighbour", std::string(to_string(r.variants.q_neighbour))},
                       {"le", std::string(to_string(r.variants.le))}};
  if (r.mode == Mode::Modular) j["modular"] = json{{"trials", r.trials}, {"seed", r.seed}, {"prime", r.prime}};
  if (include_timing) j["millis"] = r.millis;
  return j;
}

json to_json(const AmbiguityFinding& f, bool include_timing) {
  json reports = json::array();
  for (const auto& r : f.reports) reports.push_back(to_json(r, include_timing));
  return json{{"question", f.question}, {"candidate", f.candidate}, {"satisfies", f.satisfies},
              {"reports", std::move(reports)}};
}

std::string render_ascii(const SymplecticTableau& t) {
  const auto text = letter_text(t.rows);
  std::size_t w = 1;
  for (const auto& r : text)
    for (const auto& s : r) w = std::max(w, s.size());
  std::string out;
  for (const auto& r : text) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += ' ';
      line += r[c] + std::string(w - r[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string render_ascii(const ShiftedTableau& st) { return shifted_layout(st.rows, letter_text(st.rows)); }

std::string render_ascii(const PrimedShiftedTableau& qt) {
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < qt.base.rows.size(); ++i) {
    auto& row = text.emplace_back();
    for (std::size_t c = 0; c < qt.base.rows[i].size(); ++c)
      row.push_back(to_string(Entry{qt.base.rows[i][c], qt.primed[i][c]}));
  }
  return shifted_layout(qt.base.rows, text);
}

std::string render_ascii(const UTurnASM& a) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : a.a.to_rows()) {
    auto& row = cells.emplace_back();
    for (int x : r) row.push_back(std::to_string(x));
  }
  return bracketed(cells);
}

std::string render_ascii(const CompassPointMatrix& c) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : c.rows) {
    auto& row = cells.emplace_back();
    for (Compass x : r) row.push_back(std::string(to_string(x)));
  }
  return bracketed(cells);
}

std::string render_ascii(const SympGTPattern& g) {
  std::size_t w = 1;
  for (const auto& r : g.rows)
    for (int x : r) w = std::max(w, std::to_string(x).size());
  const std::size_t slot = w + 1;
  std::vector<std::string> lines;
  std::size_t width = 0;
  for (int t = 0; t < 2 * g.n; ++t) {
    const auto& row = g.rows[2 * g.n - 1 - t];
    std::string line(t * slot, ' ');
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += std::string(slot, ' ');
      const std::string s = std::to_string(row[c]);
      line += std::string(w - s.size(), ' ') + s + ' ';
    }
    width = std::max(width, line.size());
    lines.push_back(std::move(line));
  }
  std::string out;
  for (int t = 0; t < 2 * g.n; ++t) {
    const std::string label = to_string(Letter::from_ordinal(2 * g.n - 1 - t));
    out += lines[t] + std::string(width - lines[t].size() + 2, ' ') + label + '\n';
  }
  return out;
}

std::string render_ascii(const AnyObject& obj) {
  return std::visit([](const auto& o) { return render_ascii(o); }, obj);
}

std::string render_annotated(const ShiftedTableau& st, const std::vector<std::vector<LaurentPoly>>& cells) {
  std::vector<std::vector<std::string>> text;
  for (const auto& r : cells) {
    auto& row = text.emplace_back();
    for (const auto& p : r) row.push_back(to_pretty_string(p));
  }
  return shifted_layout(st.rows, text);
}

}  // namespace sptok::io
