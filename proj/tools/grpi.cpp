// grpi: batch front end for the graded identity library.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

#include "grpi/grpi.hpp"

namespace {

using namespace grpi;

enum Exit : int { kOk = 0, kFalse = 1, kInput = 2, kResource = 3, kInternal = 4 };

struct Options {
  std::string verb;
  std::string algebra;
  std::string signature;
  std::string poly;
  std::string on = "A";
  std::string field;
  std::string format = "json";
  std::string group = "cyclic:2";
  std::string seq;
  std::string w;
  std::string outer;
  std::string mode = "graded";
  std::string model = "A";
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultCellBudget;
  std::int64_t d = 3, d1 = 0, d2 = 0, elt_order = 0, group_order = 0;
  std::optional<std::size_t> length;
  bool exact = false;
};

std::shared_ptr<const GroupTable> group_from_flag(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("group must be cyclic:N or symmetric:N");
  auto kind = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    n = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw InputError("group must be cyclic:N or symmetric:N");
  }
  if (kind == "cyclic") return std::make_shared<const GroupTable>(cyclic_group(n));
  if (kind == "symmetric") return std::make_shared<const GroupTable>(symmetric_group(n));
  throw InputError("group must be cyclic:N or symmetric:N");
}

Signature parse_signature(const std::string& csv) {
  Signature s;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(item, &used);
      if (used != item.size()) throw InputError("");
      s.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InputError("signature must be a comma-separated list of counts");
    }
  }
  if (s.empty()) throw InputError("signature must be a comma-separated list of counts");
  return s;
}

std::string signature_text(const Signature& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

// All signatures of total size 1..max over a group of the given order.
std::vector<Signature> signatures_up_to(std::size_t order, std::uint32_t max) {
  std::vector<Signature> out;
  for (std::uint32_t n = 1; n <= max; ++n) {
    Signature s(order, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
      if (i + 1 == order) {
        s[i] = left;
        out.push_back(s);
        return;
      }
      for (std::uint32_t k = left + 1; k-- > 0;) {
        s[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, n);
  }
  return out;
}

class Runner {
 public:
  explicit Runner(Options opt) : opt_(std::move(opt)) {}

  int run() {
    if (opt_.verb == "goodperms") return goodperms();
    if (opt_.verb == "blocks") return blocks();
    if (opt_.verb == "bound") return bound();
    auto choice = field_choice();
    if (choice.rational()) return dispatch(RationalField{});
    return dispatch(PrimeField(choice.prime));
  }

 private:
  Json meta() const {
    return {{"version", kVersion}, {"field", field_choice().name()}, {"budget", opt_.budget}};
  }

  void emit(Json report) const {
    report["tool"] = meta();
    std::cout << report.dump(2) << "\n";
  }

  void emit_csv_header(const std::string& columns) const {
    std::cout << "# grpi " << kVersion << " field=" << field_choice().name() << " budget=" << opt_.budget << "\n"
              << columns << "\n";
  }

  FieldChoice field_choice() const {
    if (!opt_.field.empty()) return parse_field_flag(opt_.field);
    if (!opt_.algebra.empty()) return field_from_json(document());
    return {};
  }

  const Json& document() const {
    if (!doc_) doc_ = read_json_file(opt_.algebra);
    return *doc_;
  }

  void require(bool ok, const std::string& what) const {
    if (!ok) throw InputError(what);
  }

  template <Field F>
  int dispatch(F field) {
    const auto& v = opt_.verb;
    if (v == "codim") return codim(field);
    if (v == "check") return check(field);
    if (v == "semi-check") return semi_check(field);
    if (v == "counterexample") return counterexample(field);
    if (v == "split") return split(field);
    if (v == "witness") return witness(field);
    if (v == "compose") return compose(field);
    throw InputError("unknown verb " + v);
  }

  template <Field F>
  LoadedAlgebra<F> load(F field) const {
    require(!opt_.algebra.empty(), "--algebra is required for " + opt_.verb);
    return algebra_from_json(document(), field);
  }

  template <Field F>
  std::shared_ptr<const GroupTable> poly_group(F field) const {
    if (!opt_.algebra.empty()) return load(field).algebra->group_ptr();
    return group_from_flag(opt_.group);
  }

  template <Field F>
  VariableRanges<F> ranges_on(const LoadedAlgebra<F>& loaded) const {
    if (opt_.on == "A") return VariableRanges<F>::over(loaded.algebra);
    require(opt_.on == "B" || opt_.on == "C", "--on must be A, B or C");
    require(loaded.pair.has_value(), "--on " + opt_.on + " needs a subalgebras entry in the algebra file");
    return VariableRanges<F>::over(opt_.on == "B" ? loaded.pair->b : loaded.pair->c);
  }

  template <Field F>
  int codim(F field) {
    auto loaded = load(field);
    auto ranges = ranges_on(loaded);
    std::vector<Signature> sigs;
    if (!opt_.signature.empty()) {
      sigs.push_back(parse_signature(opt_.signature));
    } else {
      require(opt_.max_degree.has_value(), "codim needs --signature or --max-degree");
      sigs = signatures_up_to(loaded.algebra->group().order(), *opt_.max_degree);
    }
    if (opt_.format == "csv") {
      emit_csv_header("signature,space_dim,codimension,identities,strategy");
      for (const auto& s : sigs) {
        auto r = codimension(ranges, s, opt_.budget);
        std::cout << '"' << signature_text(r.signature) << "\"," << r.space_dim << ',' << r.codimension << ','
                  << r.identities.size() << ',' << r.strategy << "\n";
      }
      return kOk;
    }
    if (sigs.size() == 1) {
      auto report = report_to_json(codimension(ranges, sigs.front(), opt_.budget));
      report["on"] = opt_.on;
      emit(report);
      return kOk;
    }
    Json all = Json::array();
    for (const auto& s : sigs) all.push_back(report_to_json(codimension(ranges, s, opt_.budget)));
    emit({{"on", opt_.on}, {"reports", all}});
    return kOk;
  }

  template <Field F>
  int check(F field) {
    require(!opt_.poly.empty(), "check needs --poly");
    auto loaded = load(field);
    auto ranges = ranges_on(loaded);
    auto f = parse_lie(opt_.poly, loaded.algebra->group_ptr(), field);
    CellMeter meter(opt_.budget);
    std::optional<std::map<Variable, SparseVector<typename F::value_type>>> witness;
    std::string method;
    if (is_multilinear(f)) {
      method = "multilinear/basis-tuples";
      witness = find_nonvanishing_multilinear(f, ranges, meter);
    } else {
      method = "general/grid";
      witness = find_nonvanishing(f, ranges, meter);
    }
    Json report{{"poly", print_poly(f)}, {"on", opt_.on}, {"identity", !witness}, {"method", method}};
    if (witness) {
      Json w = Json::object();
      for (const auto& [v, value] : *witness)
        w[format_variable(v, f.group())] = vector_to_json(value, loaded.algebra->dim(), field);
      report["counterexample"] = w;
    }
    emit(report);
    return witness ? kFalse : kOk;
  }

  template <Field F>
  int semi_check(F field) {
    require(!opt_.poly.empty(), "semi-check needs --poly");
    auto loaded = load(field);
    require(loaded.pair.has_value(), "semi-check needs a subalgebras entry in the algebra file");
    auto f = parse_lie(opt_.poly, loaded.algebra->group_ptr(), field);
    bool semi = is_semi_identity(f, *loaded.pair, opt_.budget);
    bool trivial = semi && is_trivial_semi(f, loaded.algebra, opt_.budget);
    emit({{"poly", print_poly(f)}, {"semi_identity", semi}, {"trivial", trivial}});
    return semi ? kOk : kFalse;
  }

  template <Field F>
  int counterexample(F field) {
    auto max = opt_.max_degree.value_or(3);
    require(max >= 1, "--max-degree must be at least 1");
    require(opt_.model == "A" || opt_.model == "direct-sum", "--model must be A or direct-sum");
    bool all = true;
    if (opt_.format == "csv") emit_csv_header("n0,n1,m,depth,codimension,generic_rank,expected");
    Json rows = Json::array();
    for (const auto& s : signatures_up_to(2, max)) {
      std::uint32_t n = s[0] + s[1];
      auto model = opt_.model == "A" ? counterexample_A(4 * n, n, field) : counterexample_direct_sum(4 * n, n, field);
      auto r = codimension(model.algebra, s, opt_.budget);
      auto generic = generic_no_identity_check(s[0], s[1]);
      bool ok = r.codimension == r.space_dim && generic.full_rank;
      all = all && ok;
      if (opt_.format == "csv") {
        std::cout << s[0] << ',' << s[1] << ',' << 4 * n << ',' << n << ',' << r.codimension << ',' << generic.rank
                  << ',' << r.space_dim << "\n";
      } else {
        rows.push_back({{"signature", r.signature},
                        {"m", 4 * n},
                        {"depth", n},
                        {"codimension", r.codimension},
                        {"generic_rank", generic.rank},
                        {"expected", r.space_dim},
                        {"full_rank", ok}});
      }
    }
    if (opt_.format != "csv") emit({{"model", opt_.model}, {"max_degree", max}, {"rows", rows}, {"no_identities", all}});
    return all ? kOk : kFalse;
  }

  template <Field F>
  int split(F field) {
    require(!opt_.poly.empty(), "split needs --poly");
    std::optional<LoadedAlgebra<F>> loaded;
    if (!opt_.algebra.empty()) loaded = load(field);
    auto group = loaded ? loaded->algebra->group_ptr() : group_from_flag(opt_.group);
    auto f = parse_lie(opt_.poly, group, field);
    bool all = true;
    Json parts = Json::array();
    for (const auto& [pattern, part] : pattern_split(f)) {
      Json y = Json::array();
      for (const auto& slots : pattern.y_slots) y.push_back(slots);
      Json entry{{"y_slots", y}, {"poly", print_poly(part)}};
      if (loaded && loaded->pair) {
        bool semi = is_semi_identity(part, *loaded->pair, opt_.budget);
        entry["semi_identity"] = semi;
        all = all && semi;
      }
      parts.push_back(entry);
    }
    emit({{"poly", print_poly(f)}, {"components", parts}});
    return all ? kOk : kFalse;
  }

  template <Field F>
  int witness(F field) {
    require(!opt_.poly.empty() && !opt_.w.empty(), "witness needs --poly and --w");
    auto group = poly_group(field);
    auto f = parse_lie(opt_.poly, group, field);
    auto w = parse_lie(opt_.w, group, field);
    try {
      auto h = left_ideal_witness(f, w);
      emit({{"f", print_poly(f)}, {"w", print_poly(w)}, {"witness", print_poly(h)}, {"nonzero", true}});
      return kOk;
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      emit({{"f", print_poly(f)}, {"w", print_poly(w)}, {"nonzero", false}});
      return kFalse;
    }
  }

  template <Field F>
  int compose(F field) {
    require(!opt_.poly.empty() && !opt_.outer.empty(), "compose needs --outer and --poly");
    require(opt_.mode == "graded" || opt_.mode == "ordinary", "--mode must be graded or ordinary");
    std::optional<LoadedAlgebra<F>> loaded;
    if (!opt_.algebra.empty()) loaded = load(field);
    auto group = loaded ? loaded->algebra->group_ptr() : group_from_flag(opt_.group);
    auto outer = parse_lie(opt_.outer, group, field);
    auto inner = parse_lie(opt_.poly, group, field);
    auto h = opt_.mode == "graded" ? compose_outer_graded(outer, inner) : compose_outer_ordinary(outer, inner);
    Json report{{"mode", opt_.mode}, {"outer", print_poly(outer)}, {"inner", print_poly(inner)}, {"result", print_poly(h)}};
    if (!loaded) {
      emit(report);
      return kOk;
    }
    bool identity = check_identity_multilinear(h, ranges_on(*loaded), opt_.budget);
    report["on"] = opt_.on;
    report["identity"] = identity;
    emit(report);
    return identity ? kOk : kFalse;
  }

  int goodperms() {
    auto max = opt_.max_degree.value_or(8);
    require(max >= 1, "--max-degree must be at least 1");
    emit_csv_header("n,d,good_count,bound");
    for (std::size_t n = 1; n <= max; ++n) {
      auto c = count_d_good(n, opt_.d);
      std::cout << n << ',' << opt_.d << ',' << c.count << ',' << c.bound.get_str() << "\n";
    }
    return kOk;
  }

  int blocks() {
    auto group = group_from_flag(opt_.group);
    std::vector<GroupElement> seq;
    if (!opt_.seq.empty()) {
      std::stringstream in(opt_.seq);
      std::string item;
      while (std::getline(in, item, ',')) {
        auto g = group->find(item);
        require(g.has_value(), "unknown group element '" + item + "' in --seq");
        seq.push_back(*g);
      }
    } else {
      require(opt_.seed.has_value(), "blocks needs --seq or a --seed for a random sequence");
      std::mt19937_64 rng(*opt_.seed);
      std::uniform_int_distribution<GroupElement> pick(0, static_cast<GroupElement>(group->order() - 1));
      for (std::size_t i = 0; i < opt_.length.value_or(group->order() * opt_.d); ++i) seq.push_back(pick(rng));
    }
    auto found = trivial_blocks(*group, seq, opt_.d);
    Json labels = Json::array();
    for (auto g : seq) labels.push_back(group->label(g));
    Json out_blocks = Json::array();
    for (auto [s, e] : found) out_blocks.push_back({s, e});
    emit({{"sequence", labels}, {"d", opt_.d}, {"blocks", out_blocks}, {"found", !found.empty()}});
    return found.empty() ? kFalse : kOk;
  }

  int bound() {
    TheoremDegreeOptions o;
    o.exact = opt_.exact;
    auto r = theorem_degree(opt_.d1, opt_.d2, opt_.elt_order, opt_.group_order, o);
    Json n;
    if (r.n)
      n = r.n->get_str();
    else
      n = {{"log10_lo", r.log10_lo}, {"log10_hi", r.log10_hi}};
    emit({{"coefficient", r.coefficient.get_str()},
          {"alpha", {{"lo", r.alpha_lo}, {"hi", r.alpha_hi}}},
          {"n", n},
          {"precision_bits", r.precision}});
    return kOk;
  }

  Options opt_;
  mutable std::optional<Json> doc_;
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Graded polynomial identity toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field, "rational or p:PRIME");
    sub->add_option("--budget", opt.budget, "cell budget for evaluation searches");
    sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", opt.seed, "seed for randomized modes");
  };
  auto algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "algebra description (JSON)");
    sub->add_option("--on", opt.on, "evaluate over A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
  };

  auto* codim = app.add_subcommand("codim", "codimension and identity basis for a signature");
  common(codim);
  algebra(codim);
  codim->add_option("--signature", opt.signature, "counts per group element, comma separated");
  codim->add_option("--max-degree", opt.max_degree, "sweep all signatures up to this degree");

  auto* check = app.add_subcommand("check", "is the polynomial a graded identity");
  common(check);
  algebra(check);
  check->add_option("--poly", opt.poly)->required();

  auto* semi = app.add_subcommand("semi-check", "is the polynomial a (B, C) semi-identity");
  common(semi);
  semi->add_option("--algebra", opt.algebra)->required();
  semi->add_option("--poly", opt.poly)->required();

  auto* cex = app.add_subcommand("counterexample", "codimensions of the infinitely generated counterexample");
  common(cex);
  cex->add_option("--max-degree", opt.max_degree);
  cex->add_option("--model", opt.model, "A or direct-sum")->check(CLI::IsMember({"A", "direct-sum"}));

  auto* good = app.add_subcommand("goodperms", "count d-good permutations");
  common(good);
  good->add_option("--max-degree", opt.max_degree, "largest n");
  good->add_option("--d", opt.d);

  auto* blocks = app.add_subcommand("blocks", "pigeonhole blocks with trivial product");
  common(blocks);
  blocks->add_option("--group", opt.group, "cyclic:N or symmetric:N");
  blocks->add_option("--seq", opt.seq, "comma-separated element labels");
  blocks->add_option("--length", opt.length, "length of a random sequence (default |H| * d)");
  blocks->add_option("--d", opt.d);

  auto* bound = app.add_subcommand("bound", "degree bound alpha^alpha");
  common(bound);
  bound->add_option("--d1", opt.d1)->required();
  bound->add_option("--d2", opt.d2)->required();
  bound->add_option("--elt-order", opt.elt_order)->required();
  bound->add_option("--group-order", opt.group_order)->required();
  bound->add_flag("--exact", opt.exact, "print n in full");

  auto* split = app.add_subcommand("split", "split a polynomial by y/z pattern");
  common(split);
  split->add_option("--algebra", opt.algebra);
  split->add_option("--group", opt.group);
  split->add_option("--poly", opt.poly)->required();

  auto* witness = app.add_subcommand("witness", "left ideal witness f(x1 w, ..., xn w)");
  common(witness);
  witness->add_option("--algebra", opt.algebra);
  witness->add_option("--group", opt.group);
  witness->add_option("--poly", opt.poly)->required();
  witness->add_option("--w", opt.w)->required();

  auto* compose = app.add_subcommand("compose", "compose an outer polynomial with an inner one");
  common(compose);
  algebra(compose);
  compose->add_option("--group", opt.group);
  compose->add_option("--outer", opt.outer)->required();
  compose->add_option("--poly", opt.poly, "inner polynomial")->required();
  compose->add_option("--mode", opt.mode, "graded or ordinary")->check(CLI::IsMember({"graded", "ordinary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  opt.verb = app.get_subcommands().front()->get_name();

  try {
    return Runner(std::move(opt)).run();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DegenerateParameters& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
