/**
 * Command-line front end.
 *
 * Subcommands: construct | verify | design | search | selftest.  Every run
 * emits one JSON report (stdout or --out) whose bytes depend only on the
 * configuration and seed; wall time goes to stderr.  Exit codes: 0 success,
 * 1 error, 2 bound violated under --assert-bound, 3 budget refusal.
 */
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "higgledy/report.hpp"
#include "higgledy/selftest.hpp"

namespace {

using higgledy::Budget;
using higgledy::Field;
using higgledy::Json;
using higgledy::LineSet;
using higgledy::Space;
using higgledy::Subspace;

void emit(const Json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << text;
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    return Json::parse(f);
}

struct Options {
    std::string name;          // construct target / verify property / design mode / search strategy
    std::string field = "5";
    int dim = 3;
    std::size_t count = 0;     // 0 = construction default
    unsigned s = 1, r = 1, t = 1;
    std::string mode = "strong";
    std::string in_path, out_path, method = "both";
    std::size_t max_size = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0 = library default
    bool assert_bound = false;
    bool with_infinity = false;

    Budget make_budget() const {
        Budget b;
        if (budget > 0) {
            b.max_subspaces = budget;
            b.max_pluecker_points = budget;
        }
        return b;
    }
};

int run_construct(const Options& opt) {
    const Field F = Field::parse(opt.field);
    LineSet ls = [&]() -> LineSet {
        if (opt.name == "tangents") {
            const Space sp(F, opt.dim);
            const std::size_t count = opt.count > 0 ? opt.count : F.size();
            if (count > F.size()) throw std::invalid_argument("more tangent parameters than field elements");
            LineSet out(sp, "moment-tangents");
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto t = F.element(i);
                out.add(higgledy::moment_tangent(sp, t), "t=" + F.str(t));
            }
            if (opt.with_infinity) out.add(higgledy::moment_tangent_infinity(sp), "t=infinity");
            return out;
        }
        if (opt.name == "diverted") {
            const Space sp(F, opt.dim);
            const std::size_t count = opt.count > 0 ? opt.count : static_cast<std::size_t>(2 * opt.dim - 1);
            return higgledy::higgledy_family(sp, count, higgledy::default_injection(sp));
        }
        if (opt.name == "triangle") return higgledy::plane_triangle(Space(F, 2));
        if (opt.name == "fano") return higgledy::fano_concurrent();
        if (opt.name == "three-ruling")
            return higgledy::pg3_examples(Space(F, 3), higgledy::Pg3Variant::ThreeRuling);
        if (opt.name == "plus-exterior")
            return higgledy::pg3_examples(Space(F, 3), higgledy::Pg3Variant::PlusExterior);
        if (opt.name == "plus-two-secants")
            return higgledy::pg3_examples(Space(F, 3), higgledy::Pg3Variant::PlusTwoSecants);
        throw std::invalid_argument("unknown construction: " + opt.name);
    }();

    const std::string claim =
        opt.name == "tangents"     ? "tangent lines of the moment curve"
        : opt.name == "diverted"   ? "diverted tangents: curve points paired with shifted directions"
        : opt.name == "triangle"   ? "the three coordinate lines of a projective plane"
        : opt.name == "fano"       ? "three concurrent lines of PG(2,2)"
        : opt.name == "three-ruling" ? "three lines of one ruling of the hyperbolic quadric"
        : opt.name == "plus-exterior"
            ? "three ruling lines plus a line disjoint from the quadric"
            : "three ruling lines plus two quadric-meeting lines with no common opposite transversal";
    const Json config = {{"name", opt.name},
                         {"field", higgledy::field_to_json(ls.space.field)},
                         {"dim", ls.space.dim},
                         {"count", ls.size()}};
    emit(higgledy::make_report("construct", claim, config, higgledy::lineset_to_json(ls)), opt.out_path);
    return 0;
}

int run_measure_design(const Options& opt);

int run_design(const Options& opt) {
    if (opt.name == "measure") return run_measure_design(opt);
    higgledy::DesignParams params{Field::parse(opt.field), opt.dim, opt.s, opt.r, opt.t};
    const higgledy::DesignFamily fam =
        opt.name == "frs" ? higgledy::gk_frs_design(params) : higgledy::gk_mult_design(params);
    const std::string claim = opt.name == "frs"
        ? "kernels of evaluation conditions along orbit labels, pairwise disjoint condition sets"
        : "kernels of order-t vanishing conditions at each field element";
    const Json config = {{"mode", opt.name},
                         {"field", higgledy::field_to_json(params.base)},
                         {"d", opt.dim},
                         {"r", opt.r},
                         {"t", opt.t}};
    emit(higgledy::make_report("design", claim, config, higgledy::design_to_json(fam)), opt.out_path);
    return 0;
}

// Shared by `verify design` and `design measure`.
int run_measure_design(const Options& opt) {
    if (opt.in_path.empty()) throw std::invalid_argument("design measurement needs --in <family.json>");
    const Json doc = load_json(opt.in_path);
    const Json& payload = doc.contains("result") ? doc.at("result") : doc;
    const higgledy::DesignFamily fam = higgledy::design_from_json(payload);
    const higgledy::DesignReport rep = higgledy::design_measure(fam, opt.s, opt.mode, opt.make_budget());
    const Json config = {{"property", "design"},
                         {"in", opt.in_path},
                         {"field", higgledy::field_to_json(fam.params.base)},
                         {"s", opt.s},
                         {"mode", opt.mode}};
    emit(higgledy::make_report("verify",
                               "measured intersection parameter stays within the exact claimed bound",
                               config, higgledy::design_report_to_json(rep)),
         opt.out_path);
    return !rep.bound_satisfied && opt.assert_bound ? 2 : 0;
}

int run_verify(const Options& opt) {
    const Budget budget = opt.make_budget();

    if (opt.name == "wronskian") {  // random-basis property check, no input file
        const Field F = Field::parse(opt.field);
        std::mt19937_64 rng(opt.seed);
        const std::size_t trials = opt.count > 0 ? opt.count : 200;
        int max_degree = -1;
        std::uint64_t bound = 0;
        bool all_ok = true;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto basis = higgledy::selftest::detail::random_poly_basis(F, opt.s, opt.dim, rng);
            const auto rep = higgledy::wronskian_degree_check(F, basis, opt.mode, opt.dim);
            max_degree = std::max(max_degree, rep.degree);
            bound = rep.bound;
            all_ok = all_ok && rep.nonzero && rep.within_bound;
        }
        const Json config = {{"property", opt.name}, {"field", higgledy::field_to_json(F)},
                             {"d", opt.dim},         {"s", opt.s},
                             {"mode", opt.mode},     {"trials", trials},
                             {"seed", opt.seed}};
        const Json result = {
            {"trials", trials}, {"max_degree", max_degree}, {"bound", bound}, {"all_within_bound", all_ok}};
        emit(higgledy::make_report("verify", "determinant degree bound for echelonized polynomial bases",
                                   config, result),
             opt.out_path);
        return !all_ok && opt.assert_bound ? 2 : 0;
    }

    if (opt.name == "design") return run_measure_design(opt);

    if (opt.in_path.empty()) throw std::invalid_argument("verify " + opt.name + " needs --in <report.json>");
    const Json doc = load_json(opt.in_path);
    const Json& payload = doc.contains("result") ? doc.at("result") : doc;

    const LineSet ls = higgledy::lineset_from_json(payload);
    const Json config = {{"property", opt.name},
                         {"in", opt.in_path},
                         {"field", higgledy::field_to_json(ls.space.field)},
                         {"dim", ls.space.dim},
                         {"lines", ls.size()}};

    if (opt.name == "generator") {
        const higgledy::GeneratorReport rep = higgledy::is_generator_lineset(ls);
        emit(higgledy::make_report("verify", "the family's traces span every hyperplane", config,
                                   higgledy::generator_report_to_json(rep)),
             opt.out_path);
        return 0;
    }
    if (opt.name == "transversal") {
        Json result;
        if (opt.method == "small") {
            result["witness"] = higgledy::witness_to_json(higgledy::build_transversal_small(ls));
            result["found"] = true;
        } else {
            if (opt.method == "geometric" || opt.method == "both") {
                const auto w = higgledy::find_transversal_geometric(ls, budget);
                result["geometric"] = {{"found", w.has_value()}};
                if (w) result["geometric"]["witness"] = higgledy::witness_to_json(*w);
            }
            if (opt.method == "pluecker" || opt.method == "both") {
                const auto w = higgledy::find_transversal_pluecker(ls, budget);
                result["pluecker"] = {{"found", w.has_value()}};
                if (w) result["pluecker"]["witness"] = higgledy::witness_to_json(*w);
            }
            if (opt.method == "both")
                result["agree"] = result["geometric"]["found"] == result["pluecker"]["found"];
        }
        emit(higgledy::make_report("verify",
                                   "existence of a codimension-2 subspace meeting every family line",
                                   config, result),
             opt.out_path);
        return 0;
    }
    if (opt.name == "sufficiency") {
        const higgledy::SufficiencyReport rep = higgledy::check_sufficiency(ls, budget);
        emit(higgledy::make_report(
                 "verify", "no transversal forces generation; generation with a transversal forces size > q",
                 config, higgledy::sufficiency_to_json(rep)),
             opt.out_path);
        return rep.consistent ? 0 : 1;
    }
    throw std::invalid_argument("unknown property: " + opt.name);
}

int run_search(const Options& opt) {
    const Field F = Field::parse(opt.field);
    const Space sp(F, opt.dim);
    const Budget budget = opt.make_budget();
    if (opt.max_size == 0) throw std::invalid_argument("search needs --max-size");

    higgledy::SearchReport rep;
    if (opt.name == "exhaustive") {
        rep = higgledy::search_minimal_generator_exhaustive(sp, opt.max_size, budget);
    } else {
        const std::uint64_t restarts = opt.count > 0 ? opt.count : 1000;
        rep = higgledy::search_minimal_generator_random(sp, opt.max_size, restarts, opt.seed, budget);
    }
    const Json config = {{"strategy", opt.name}, {"field", higgledy::field_to_json(F)},
                         {"dim", opt.dim},       {"max_size", opt.max_size},
                         {"seed", opt.seed},     {"restarts", opt.count}};
    emit(higgledy::make_report("search", "smallest generating family over all lines of the space", config,
                               higgledy::search_report_to_json(rep)),
         opt.out_path);
    return 0;
}

int run_selftest(const Options& opt) {
    using higgledy::selftest::Status;
    const auto results = higgledy::selftest::run_all(opt.make_budget(), &std::cout);
    int failed = 0, refused = 0;
    Json arr = Json::array();
    for (const auto& r : results) {
        failed += r.status == Status::Fail;
        refused += r.status == Status::Refused;
        arr.push_back({{"id", r.id},
                       {"title", r.title},
                       {"status", r.status == Status::Pass     ? "pass"
                                  : r.status == Status::Fail   ? "fail"
                                                               : "refused"},
                       {"detail", r.detail}});
    }
    std::cout << results.size() - failed - refused << "/" << results.size() << " criteria passed";
    if (refused > 0) std::cout << " (" << refused << " refused by budget)";
    std::cout << std::endl;
    if (!opt.out_path.empty()) {
        const Json config = {{"budget", opt.budget}};
        const Json result = {{"criteria", arr},
                             {"passed", results.size() - failed - refused},
                             {"failed", failed},
                             {"refused", refused}};
        emit(higgledy::make_report("selftest", "thirteen-criterion exact acceptance suite", config, result),
             opt.out_path);
    }
    return failed > 0 ? 1 : refused > 0 ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of hyperplane-generating line families in PG(d,q)"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", opt.budget, "cap on enumerated subspaces / coordinate solutions");
        sub->add_option("--out", opt.out_path, "write the JSON report here instead of stdout");
    };

    auto* construct = app.add_subcommand("construct", "build a line family and print it as JSON");
    construct->add_option("name", opt.name, "construction")
        ->required()
        ->check(CLI::IsMember(
            {"tangents", "diverted", "triangle", "fano", "three-ruling", "plus-exterior", "plus-two-secants"}));
    construct->add_option("--field", opt.field, "field size q or 'p^k'");
    construct->add_option("--dim", opt.dim, "projective dimension d")->check(CLI::Range(2, 16));
    construct->add_option("--count", opt.count, "number of parameters (default per construction)");
    construct->add_flag("--infinity", opt.with_infinity, "tangents: append the tangent at infinity");
    add_common(construct);

    auto* design = app.add_subcommand("design", "build or measure a polynomial subspace design");
    design->add_option("kind", opt.name, "frs | mult build a family; measure reads one via --in")
        ->required()
        ->check(CLI::IsMember({"frs", "mult", "measure"}));
    design->add_option("--field", opt.field, "base field size q");
    design->add_option("--dim", opt.dim, "polynomial degree bound d (vectors have d+1 entries)");
    design->add_option("--s", opt.s, "strength the bounds are quoted at");
    design->add_option("--r", opt.r, "evaluation points live in GF(q^r)");
    design->add_option("--t", opt.t, "conditions per member");
    design->add_option("--in", opt.in_path, "measure: family JSON produced by design frs|mult");
    design->add_option("--mode", opt.mode, "measure: weak | strong");
    design->add_flag("--assert-bound", opt.assert_bound, "measure: exit 2 when the bound is violated");
    add_common(design);

    auto* verify = app.add_subcommand("verify", "verify a property of a constructed JSON artifact");
    verify->add_option("property", opt.name, "what to verify")
        ->required()
        ->check(CLI::IsMember({"generator", "transversal", "sufficiency", "design", "wronskian"}));
    verify->add_option("--in", opt.in_path, "JSON artifact produced by construct/design");
    verify->add_option("--method", opt.method, "transversal: geometric | pluecker | small | both")
        ->check(CLI::IsMember({"geometric", "pluecker", "small", "both"}));
    verify->add_option("--s", opt.s, "strength / basis dimension");
    verify->add_option("--mode", opt.mode, "design: weak|strong; wronskian: frs|mult");
    verify->add_option("--field", opt.field, "wronskian: base field");
    verify->add_option("--dim", opt.dim, "wronskian: degree bound d");
    verify->add_option("--count", opt.count, "wronskian: number of random bases");
    verify->add_option("--seed", opt.seed, "wronskian: RNG seed");
    verify->add_flag("--assert-bound", opt.assert_bound, "exit 2 when a measured bound is violated");
    add_common(verify);

    auto* search = app.add_subcommand("search", "search for small generating families");
    search->add_option("strategy", opt.name, "exhaustive | random")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--field", opt.field, "field size q or 'p^k'");
    search->add_option("--dim", opt.dim, "projective dimension d")->check(CLI::Range(2, 16));
    search->add_option("--max-size", opt.max_size, "largest family size to try (random: exact size)");
    search->add_option("--count", opt.count, "random: number of restarts");
    search->add_option("--seed", opt.seed, "random: RNG seed");
    add_common(search);

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const auto t0 = std::chrono::steady_clock::now();
    int rc = 1;
    try {
        if (app.got_subcommand(construct)) rc = run_construct(opt);
        else if (app.got_subcommand(design)) rc = run_design(opt);
        else if (app.got_subcommand(verify)) rc = run_verify(opt);
        else if (app.got_subcommand(search)) rc = run_search(opt);
        else if (app.got_subcommand(selftest)) rc = run_selftest(opt);
    } catch (const higgledy::BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << std::endl;
        rc = 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        rc = 1;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wall-time-ms: " << ms << std::endl;
    return rc;
}
