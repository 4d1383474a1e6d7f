#include "sptok/cli.hpp"

#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sptok/bijections.hpp"
#include "sptok/error.hpp"
#include "sptok/identities.hpp"
#include "sptok/io.hpp"
#include "sptok/matrices.hpp"
#include "sptok/tableaux.hpp"
#include "sptok/weights.hpp"

namespace sptok::cli {

namespace {

using io::AnyObject;
using io::json;

int exit_code(Errc c) {
  switch (c) {
    case Errc::InvariantViolation:
    case Errc::LemmaViolation: return kFailure;
    default: return kBadInput;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

[[noreturn]] void reject(const std::string& what, const Validation& v) {
  std::string msg = what;
  for (const auto& x : v.violations)
    msg += "\n  " + x.condition + " at (" + std::to_string(x.cell.row) + "," + std::to_string(x.cell.col) +
           "): " + x.detail;
  throw Error(Errc::InvalidInput, msg);
}

// The four bijective representations of one object, validated.
struct Quad {
  ShiftedTableau st;
  UTurnASM uasm;
  CompassPointMatrix cpm;
  SympGTPattern gtp;
};

UTurnASM checked_uasm(const UTurnASM& a) {
  ShiftedTableau st;
  try {
    st = uasm_to_st(a);
  } catch (const Error& e) {
    throw Error(Errc::InvalidInput, std::string("not a U-turn ASM: ") + e.what());
  }
  if (auto v = validate_uasm(a, st.shape); !v.ok()) reject("not a U-turn ASM", v);
  return a;
}

Quad quad_of(const AnyObject& obj) {
  UTurnASM a;
  if (const auto* st = std::get_if<ShiftedTableau>(&obj)) {
    if (auto v = validate(*st); !v.ok()) reject("not a shifted tableau", v);
    a = st_to_uasm(*st);
  } else if (const auto* u = std::get_if<UTurnASM>(&obj)) {
    a = checked_uasm(*u);
  } else if (const auto* c = std::get_if<CompassPointMatrix>(&obj)) {
    a = checked_uasm(cpm_to_uasm(*c));
    if (uasm_to_cpm(a) != *c) throw Error(Errc::InvalidInput, "compass codes disagree with their U-turn ASM");
  } else if (const auto* g = std::get_if<SympGTPattern>(&obj)) {
    if (auto v = validate_gtp(*g); !v.ok()) reject("not a strict symplectic GT pattern", v);
    a = gtp_to_uasm(*g);
  } else {
    throw Error(Errc::InvalidInput, io::kind_of(obj) + " objects have no U-turn ASM counterpart");
  }
  Quad q{uasm_to_st(a), a, uasm_to_cpm(a), uasm_to_gtp(a)};
  if (st_to_gtp(q.st) != q.gtp || st_to_uasm(q.st) != a || gtp_to_st(q.gtp) != q.st)
    throw Error(Errc::InvariantViolation, "the bijections do not commute on this object");
  return q;
}

void require_valid(const AnyObject& obj) {
  if (const auto* t = std::get_if<SymplecticTableau>(&obj)) {
    if (auto v = validate(*t); !v.ok()) reject("not a symplectic tableau", v);
  } else if (const auto* qt = std::get_if<PrimedShiftedTableau>(&obj)) {
    if (auto v = validate(*qt); !v.ok()) reject("not a primed shifted tableau", v);
  } else {
    quad_of(obj);
  }
}

// Enum-valued options are parsed as strings and mapped after parsing.
struct Choices {
  std::deque<std::string> text;
  std::vector<std::function<void()>> apply;

  template <class E>
  void add(CLI::App* app, const std::string& name, E& target, const std::map<std::string, E>& choices,
           const std::string& help) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : choices) keys.push_back(k);
    std::string& slot = text.emplace_back();
    CLI::Option* opt = app->add_option(name, slot, help)->check(CLI::IsMember(keys));
    apply.push_back([&target, &slot, opt, choices] {
      if (opt->count() > 0) target = choices.at(slot);
    });
  }
};

struct VerifyFlags {
  std::string id;
  std::string mu;
  int n = 0;
  int max_weight = 0;
  VerifyOptions opts;
  bool no_timing = false;
  unsigned threads = 0;
};

void add_verify_flags(CLI::App* sub, VerifyFlags& f, Choices& ch) {
  ch.add(sub, "--mode", f.opts.mode, {{"symbolic", Mode::Symbolic}, {"modular", Mode::Modular}},
      "symbolic or modular");
  sub->add_option("--trials", f.opts.trials, "evaluation points in modular mode")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.opts.seed, "seed for the evaluation points");
  sub->add_option("--prime", f.opts.prime, "prime modulus below 2^32");
  sub->add_option("--symbolic-cap", f.opts.symbolic_cap, "largest object count for symbolic mode");
  sub->add_option("--stream-cap", f.opts.stream_cap, "largest object count to stream in modular mode");
  ch.add(sub, "--accumulation", f.opts.accumulation,
      {{"auto", Accumulation::Auto}, {"streamed", Accumulation::Streamed},
       {"row-transfer", Accumulation::RowTransfer}},
      "how modular mode sums the left side");
  ch.add(sub, "--cpm-xy", f.opts.variants.cpm_xy,
      {{"standard", CpmXyWeighting::Standard}, {"alternative", CpmXyWeighting::Alternative}},
      "CPM weighting for COR_UASM");
  ch.add(sub, "--cpm-q", f.opts.variants.cpm_q,
      {{"plain", CpmQWeighting::Plain}, {"normalised", CpmQWeighting::Normalised}},
      "CPM weighting for COR_UASM_Q");
  ch.add(sub, "--c0", f.opts.variants.c0, {{"full-power", NormConstant::FullPower}, {"literal", NormConstant::Literal}},
      "constant of the normalised CPM weighting");
  ch.add(sub, "--q-neighbour", f.opts.variants.q_neighbour,
      {{"below", QNeighbour::Below}, {"above", QNeighbour::Above}}, "neighbour read by the q-tableau weight");
  ch.add(sub, "--le", f.opts.variants.le, {{"proof-sum", LeCount::ProofSum}, {"set-builder", LeCount::SetBuilder}},
      "range of j in L_e");
  sub->add_flag("--no-timing", f.no_timing, "omit millis so reports compare byte for byte");
}

template <class Fn>
int emit_objects(const std::string& format, std::ostream& out, Fn&& for_each) {
  bool first = true;
  if (format == "json") out << "[";
  for_each([&](const AnyObject& obj) {
    if (format == "json") {
      out << (first ? "\n" : ",\n") << io::to_json(obj).dump();
    } else {
      if (!first) out << '\n';
      out << io::render_ascii(obj);
    }
    first = false;
  });
  if (format == "json") out << (first ? "]\n" : "\n]\n");
  return kOk;
}

int cmd_enumerate(const std::string& family, const std::string& shape_text, int n, bool count_only,
                  const std::string& format, std::ostream& out) {
  const auto parts = parse_parts(shape_text);
  if (family == "t") {
    const Partition mu(parts);
    if (count_only) {
      std::uint64_t count = 0;
      for_each_symplectic_tableau(mu, n, [&](const SymplecticTableau&) { ++count; });
      out << count << '\n';
      return kOk;
    }
    return emit_objects(format, out, [&](auto&& emit) {
      for_each_symplectic_tableau(mu, n, [&](const SymplecticTableau& t) { emit(AnyObject(t)); });
    });
  }
  const StrictPartition lambda(parts);
  if (count_only) {
    out << (family == "qt" ? count_lhs_objects(IdentityId::COR_Q, lambda, n) : count_shifted_tableaux(lambda, n))
        << '\n';
    return kOk;
  }
  return emit_objects(format, out, [&](auto&& emit) {
    if (family == "st") {
      for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) { emit(AnyObject(st)); });
    } else if (family == "qt") {
      for_each_shifted_tableau(lambda, n, [&](const ShiftedTableau& st) {
        for_each_priming(st, [&](const PrimedShiftedTableau& qt) { emit(AnyObject(qt)); });
      });
    } else if (family == "uasm") {
      for_each_uasm(lambda, n, [&](const UTurnASM& a) { emit(AnyObject(a)); });
    } else {
      for_each_gtp(lambda, n, [&](const SympGTPattern& g) { emit(AnyObject(g)); });
    }
  });
}

int cmd_bijection(const std::string& from, const std::string& input, const std::string& format, std::ostream& out,
                  std::istream& in) {
  const AnyObject obj = io::parse_object(read_input(input, in));
  if (from != "auto" && io::kind_of(obj) != from)
    throw Error(Errc::InvalidInput, "input is a " + io::kind_of(obj) + " object, not " + from);
  const Quad q = quad_of(obj);
  if (format == "ascii") {
    out << "ST\n" << io::render_ascii(q.st) << "\nUASM\n" << io::render_ascii(q.uasm) << "\nCPM\n"
        << io::render_ascii(q.cpm) << "\nGTP\n" << io::render_ascii(q.gtp);
    return kOk;
  }
  json j;
  j["st"] = io::to_json(q.st);
  j["uasm"] = io::to_json(q.uasm);
  j["cpm"] = io::to_json(q.cpm);
  j["gtp"] = io::to_json(q.gtp);
  j["ascii"] = json{{"st", io::render_ascii(q.st)},
                    {"uasm", io::render_ascii(q.uasm)},
                    {"cpm", io::render_ascii(q.cpm)},
                    {"gtp", io::render_ascii(q.gtp)}};
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_weight(WeightScheme scheme, const std::string& input, bool annotate, bool expanded, const Variants& var,
               std::ostream& out, std::istream& in) {
  const AnyObject obj = io::parse_object(read_input(input, in));
  LaurentPoly w;
  std::string text;
  switch (scheme) {
    case WeightScheme::T_DEFORMED: {
      const auto* t = std::get_if<SymplecticTableau>(&obj);
      if (t == nullptr) throw Error(Errc::InvalidInput, "T_DEFORMED weighs symplectic tableaux");
      require_valid(obj);
      w = wgt_T(*t, true);
      break;
    }
    case WeightScheme::QT_DEFORMED: {
      const auto* qt = std::get_if<PrimedShiftedTableau>(&obj);
      if (qt == nullptr) throw Error(Errc::InvalidInput, "QT_DEFORMED weighs primed shifted tableaux");
      require_valid(obj);
      w = wgt_QT(*qt, true);
      break;
    }
    case WeightScheme::ST_XY: w = wgt_ST(quad_of(obj).st); break;
    case WeightScheme::ST_Q: w = wgt_st_q(quad_of(obj).st, var.q_neighbour); break;
    case WeightScheme::CPM_XY:
    case WeightScheme::CPM_XY_ALT:
    case WeightScheme::CPM_Q_PLAIN:
    case WeightScheme::CPM_Q_NORM: w = wgt_cpm(quad_of(obj).uasm, scheme, var.c0); break;
    case WeightScheme::GT_XY:
    case WeightScheme::GT_Q: w = wgt_gtp(quad_of(obj).gtp, scheme); break;
    case WeightScheme::GT_QX: {
      const auto g = quad_of(obj).gtp;
      w = wgt_gtp(g, scheme, var.le);
      if (!expanded) text = qx_factored(gt_statistics(g), var.le);
      break;
    }
  }
  out << (text.empty() ? to_string(w) : text) << '\n';
  if (annotate) {
    if (scheme != WeightScheme::ST_XY && scheme != WeightScheme::ST_Q)
      throw Error(Errc::InvalidInput, "--annotate applies to ST_XY and ST_Q");
    const auto st = quad_of(obj).st;
    out << io::render_annotated(st, annotate_st(st, scheme, var.q_neighbour));
  }
  return kOk;
}

json report_json(const VerificationReport& r, bool no_timing) { return io::to_json(r, !no_timing); }

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const auto rep = verify(parse_identity(f.id), Partition(parse_parts(f.mu)), f.n, f.opts);
  out << report_json(rep, f.no_timing).dump(2) << '\n';
  return rep.equal ? kOk : kFailure;
}

int cmd_sweep(const VerifyFlags& f, std::ostream& out) {
  std::vector<IdentityId> ids;
  if (f.id == "all") ids = all_identities();
  else ids.push_back(parse_identity(f.id));
  json arr = json::array();
  bool all_equal = true;
  for (IdentityId id : ids)
    for (const auto& rep : verify_sweep(id, f.n, f.max_weight, f.opts, f.threads)) {
      all_equal = all_equal && rep.equal;
      arr.push_back(report_json(rep, f.no_timing));
    }
  out << arr.dump(2) << '\n';
  return all_equal ? kOk : kFailure;
}

int cmd_ambiguities(int n, int max_weight, unsigned threads, bool no_timing, std::ostream& out) {
  json arr = json::array();
  bool defaults_hold = true;
  for (const auto& f : resolve_ambiguities(n, max_weight, threads)) {
    const auto& v = f.reports.empty() ? Variants{} : f.reports.front().variants;
    const bool is_default = v.c0 == NormConstant::FullPower && v.q_neighbour == QNeighbour::Below &&
                            v.le == LeCount::ProofSum;
    if (is_default) defaults_hold = defaults_hold && f.satisfies;
    arr.push_back(io::to_json(f, !no_timing));
  }
  out << arr.dump(2) << '\n';
  return defaults_hold ? kOk : kFailure;
}

int cmd_render(const std::string& input, const std::string& format, std::ostream& out, std::istream& in) {
  const AnyObject obj = io::parse_object(read_input(input, in));
  if (format == "json") out << io::to_json(obj).dump(2) << '\n';
  else out << io::render_ascii(obj);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Symplectic shifted tableaux and U-turn ASM identities", "sptok"};
  app.require_subcommand(1);

  std::string family, shape, format = "json", input, from = "auto";
  int n = 0;
  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "list the objects of one family");
  en->add_option("--family", family, "st, t, qt, uasm or gtp")
      ->required()
      ->check(CLI::IsMember({"st", "t", "qt", "uasm", "gtp"}));
  en->add_option("--lambda", shape, "shape as comma-separated parts")->required();
  en->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
  en->add_flag("--count-only", count_only, "print only the number of objects");
  en->add_option("--format", format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

  auto* bij = app.add_subcommand("bijection", "translate one object into ST, UASM, CPM and GTP");
  bij->add_option("--from", from, "input kind, or auto")->check(CLI::IsMember({"auto", "st", "uasm", "cpm", "gtp"}));
  bij->add_option("--input", input, "JSON file, - for stdin")->required();
  bij->add_option("--format", format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

  Choices choices;
  std::string scheme_name;
  bool annotate = false;
  bool expanded = false;
  VerifyFlags vf;
  auto* wt = app.add_subcommand("weight", "weight of one object under a scheme");
  wt->add_option("--scheme", scheme_name, "weight scheme")->required();
  wt->add_option("--input", input, "JSON file, - for stdin")->required();
  wt->add_flag("--annotate", annotate, "also print per-cell weights (ST_XY, ST_Q)");
  wt->add_flag("--expanded", expanded, "print GT_QX as an expanded polynomial");
  choices.add(wt, "--c0", vf.opts.variants.c0, {{"full-power", NormConstant::FullPower}, {"literal", NormConstant::Literal}},
      "constant of CPM_Q_NORM");
  choices.add(wt, "--q-neighbour", vf.opts.variants.q_neighbour,
      {{"below", QNeighbour::Below}, {"above", QNeighbour::Above}}, "neighbour read by ST_Q");
  choices.add(wt, "--le", vf.opts.variants.le, {{"proof-sum", LeCount::ProofSum}, {"set-builder", LeCount::SetBuilder}},
      "range of j in L_e for GT_QX");

  auto* ve = app.add_subcommand("verify", "check one identity for one mu");
  ve->add_option("--id", vf.id, "identity")->required();
  ve->add_option("--mu", vf.mu, "mu as comma-separated parts, empty for the empty partition")->required();
  ve->add_option("--n", vf.n, "rank")->required()->check(CLI::PositiveNumber);
  add_verify_flags(ve, vf, choices);

  auto* sw = app.add_subcommand("sweep", "check identities for every mu up to a weight");
  sw->add_option("--id", vf.id, "identity, or all")->required();
  sw->add_option("--n", vf.n, "rank")->required()->check(CLI::PositiveNumber);
  sw->add_option("--max-weight", vf.max_weight, "largest |mu|")->required()->check(CLI::NonNegativeNumber);
  sw->add_option("--threads", vf.threads, "worker threads; 0 reads SPTOK_THREADS");
  add_verify_flags(sw, vf, choices);

  int amb_n = 2;
  int amb_weight = 2;
  auto* am = app.add_subcommand("ambiguities", "test the competing readings of the q-weightings");
  am->add_option("--n", amb_n, "rank")->check(CLI::PositiveNumber);
  am->add_option("--max-weight", amb_weight, "largest |mu|")->check(CLI::NonNegativeNumber);
  am->add_option("--threads", vf.threads, "worker threads; 0 reads SPTOK_THREADS");
  am->add_flag("--no-timing", vf.no_timing, "omit millis");

  auto* re = app.add_subcommand("render", "print an object as ASCII or canonical JSON");
  re->add_option("--input", input, "JSON file, - for stdin")->required();
  re->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"json", "ascii"}));

  std::vector<std::string> argv_store{"sptok"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  for (auto& f : choices.apply) f();

  try {
    if (*en) return cmd_enumerate(family, shape, n, count_only, format, out);
    if (*bij) return cmd_bijection(from, input, format, out, in);
    if (*wt) return cmd_weight(parse_scheme(scheme_name), input, annotate, expanded, vf.opts.variants, out, in);
    if (*ve) return cmd_verify(vf, out);
    if (*sw) return cmd_sweep(vf, out);
    if (*am) return cmd_ambiguities(amb_n, amb_weight, vf.threads, vf.no_timing, out);
    if (*re) {
      if (format == "json" && !re->count("--format")) format = "ascii";
      return cmd_render(input, format, out, in);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kBadInput;
}

}  // namespace sptok::cli
