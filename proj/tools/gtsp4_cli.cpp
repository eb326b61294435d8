#include "gtsp4/action.hpp"
#include "gtsp4/gtbasis.hpp"
#include "gtsp4/oracle.hpp"
#include "gtsp4/serialize.hpp"
#include "gtsp4/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gtsp4;

namespace {

struct Options {
    std::string weight;
    std::string diagram;
    std::string generator;
    std::string suite = "all";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int samples = 20;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

HighestWeight weight_of(const Options& o)
{
    if (o.weight.empty()) throw UsageError("--weight is required");
    HighestWeight w;
    try {
        w = HighestWeight::parse(o.weight);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --weight: ") + e.what());
    }
    if (!w.valid()) throw UsageError("--weight must satisfy m2 >= m1 >= 0 with entries of one parity");
    return w;
}

void emit(const Json& j, const Options& o)
{
    const std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

int cmd_dim(const Options& o)
{
    HighestWeight w = weight_of(o);
    emit(Json::parse(weyl_dim(w).get_str()), o);
    return 0;
}

int cmd_diagrams(const Options& o)
{
    Json a = Json::array();
    for (const auto& d : enumerate_diagrams(weight_of(o))) a.push_back(to_json(d));
    emit(a, o);
    return 0;
}

int cmd_basis(const Options& o)
{
    HighestWeight w = weight_of(o);
    std::optional<GTDiagram> only;
    if (!o.diagram.empty()) {
        try {
            only = parse_diagram(o.diagram);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (only->weight() != w) throw UsageError("--diagram does not belong to --weight");
    }
    Json a = Json::array();
    if (only) {
        a.push_back({{"diagram", to_json(*only)}, {"function", to_json(gt_function(*only))}});
    } else {
        auto ds = enumerate_diagrams(w);
        auto fs = gt_basis(w);
        for (std::size_t i = 0; i < ds.size(); ++i) a.push_back({{"diagram", to_json(ds[i])}, {"function", to_json(fs[i])}});
    }
    emit(a, o);
    return 0;
}

int cmd_matrix(const Options& o)
{
    HighestWeight w = weight_of(o);
    std::vector<OperatorSpec> gens;
    if (o.generator.empty()) {
        gens = sp4_basis();
    } else {
        OperatorSpec g;
        try {
            g = OperatorSpec::parse(o.generator);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (g.kind != OpKind::f_sp4) throw UsageError("--generator must be an sp4 generator f[i,j]");
        gens.push_back(g);
    }
    GTModule m = GTModule::build(w);
    Json a = Json::array();
    for (const auto& g : gens) a.push_back(to_json(generator_matrix(m, g)));
    emit(gens.size() == 1 ? a[0] : a, o);
    return 0;
}

int cmd_branch(const Options& o)
{
    HighestWeight w = weight_of(o);
    RepSpace r = build_irrep(w);
    Json j = Json::object();
    for (HalfInt s = w.m2; s >= HalfInt::from_int(0); s -= HalfInt::from_int(1)) {
        std::size_t n = h_highest_subspace(r, s).size();
        if (n) j[s.str()] = n;
    }
    emit(j, o);
    return 0;
}

int cmd_verify(const Options& o)
{
    HighestWeight w = weight_of(o);
    if (o.suite != "all" && std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
        throw UsageError("unknown --suite " + o.suite);
    if (o.samples < 1) throw UsageError("--samples must be positive");
    VerifyOptions opt{o.seed, o.samples};
    Json rep = report_json(w, run_suites(o.suite, w, opt));
    emit(rep, o);
    return rep["pass"].get<bool>() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gelfand-Tsetlin type bases of sp4 = o5 representations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--weight", o.weight, "highest weight m2,m1 (e.g. 3/2,1/2)");
        sub->add_option("--out", o.out, "write the JSON output to a file");
    };
    auto* dim = app.add_subcommand("dim", "dimension of the irreducible representation");
    auto* diagrams = app.add_subcommand("diagrams", "diagrams indexing the basis");
    auto* basis = app.add_subcommand("basis", "basis polynomials");
    auto* matrix = app.add_subcommand("matrix", "generator matrices in the basis");
    auto* branch = app.add_subcommand("branch", "multiplicities under the o3 = sl2 subalgebra");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    for (auto* s : {dim, diagrams, basis, matrix, branch, verify}) add_common(s);
    basis->add_option("--diagram", o.diagram, "only this diagram, as (sigma; m2,m1; k2,k1; s2,s1)");
    matrix->add_option("--generator", o.generator, "generator f[i,j]; all ten when omitted");
    verify->add_option("--suite", o.suite, "gkz, plucker, basis, lie, principal-lemma, covering or all");
    verify->add_option("--seed", o.seed, "seed for random group samples");
    verify->add_option("--samples", o.samples, "number of random group samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*dim) return cmd_dim(o);
        if (*diagrams) return cmd_diagrams(o);
        if (*basis) return cmd_basis(o);
        if (*matrix) return cmd_matrix(o);
        if (*branch) return cmd_branch(o);
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
