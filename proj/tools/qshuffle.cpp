#include <CLI11.hpp>

#include <qsh/serial.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qsh;

namespace {

struct RunConfig {
    std::string spec_path;
    int nmax = 4;
    bool nmax_given = false;
    std::string filtration = "wordlen";
    std::string algebra = "shuffle";
    std::string mode; // empty = per-degree default
    unsigned primes = 3;
    std::uint64_t seed = 1;
    std::string format = "tsv";
    std::string out;
    int jobs = 1;
    bool force = false;
    bool decimal = false;
    std::string bound_delta;
    std::string bound_c;
    bool strict = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FieldError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream outf(cfg.out, std::ios::binary);
    if (!outf) throw FieldError("cannot write file: " + cfg.out);
    outf << text;
}

HomologyOptions homology_options(const RunConfig& cfg) {
    HomologyOptions opt;
    if (cfg.mode == "exact")
        opt.mode = RankMode::Exact;
    else if (cfg.mode == "modular")
        opt.mode = RankMode::Modular;
    else if (!cfg.mode.empty())
        throw FieldError("mode must be exact or modular");
    opt.primes = cfg.primes;
    opt.seed = cfg.seed;
    opt.force = cfg.force;
    return opt;
}

BraidedVectorSpace load_spec(const RunConfig& cfg, bool validate = true) {
    if (cfg.spec_path.empty()) throw FieldError("--spec is required");
    return parse_braiding_spec(slurp(cfg.spec_path), validate);
}

mpq_class parse_fraction(const std::string& text) {
    Scalar s = parse_scalar(text, FieldContext::rational());
    return s.rational_value();
}

FiltrationTable run_filtration(const BraidedVectorSpace& V, const RunConfig& cfg) {
    if (cfg.filtration == "wordlen") {
        if (cfg.algebra != "shuffle")
            throw FieldError("the word-length filtration lives on the shuffle algebra");
        return wordlength_filtration(V, cfg.nmax);
    }
    if (cfg.filtration == "weight") {
        if (cfg.algebra == "tensor") return weight_filtration_T(V, cfg.nmax);
        if (cfg.algebra == "shuffle") return weight_filtration_A(V, cfg.nmax);
        throw FieldError("weight tables are emitted for the tensor or shuffle side");
    }
    if (cfg.filtration.rfind("weighted:", 0) == 0) {
        if (cfg.algebra != "shuffle")
            throw FieldError("weighted filtrations live on the shuffle algebra");
        std::vector<long> f = {0}; // index 0 unused
        std::stringstream ss(cfg.filtration.substr(9));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                f.push_back(std::stol(item));
            } catch (const std::exception&) {
                throw FieldError("weighted filtration costs must be integers: " + item);
            }
        }
        if (int(f.size()) <= cfg.nmax)
            throw FieldError("weighted filtration needs a cost for every part size up to nmax");
        return weighted_wordlength_filtration(V, f, cfg.nmax);
    }
    throw FieldError("filtration must be wordlen, weight, or weighted:<costs>");
}

int cmd_check(const RunConfig& cfg) {
    std::ostringstream rep;
    bool pass = true;
    try {
        BraidedVectorSpace V = load_spec(cfg, false);
        rep << "parse: pass\n";
        rep << "dimension: " << V.dim() << "\n";
        switch (V.field()->kind()) {
            case FieldKind::Rational: rep << "field: rational\n"; break;
            case FieldKind::Cyclotomic:
                rep << "field: cyclotomic order " << V.field()->order() << "\n";
                break;
            case FieldKind::Prime: rep << "field: prime\n"; break;
        }
        bool inv = invertible(V);
        rep << "invertible: " << (inv ? "pass" : "fail") << "\n";
        pass = pass && inv;
        if (yang_baxter_check(V)) {
            rep << "yang-baxter: pass\n";
        } else {
            pass = false;
            int d = V.dim();
            bool found = false;
            for (int i = 0; i < d && !found; ++i)
                for (int j = 0; j < d && !found; ++j)
                    for (int k = 0; k < d && !found; ++k) {
                        SparseVec v = sv_unit(word_pack({i, j, k}, d), V.field());
                        SparseVec lhs = apply_word(V, {1, 2, 1}, v, 3);
                        SparseVec rhs = apply_word(V, {2, 1, 2}, v, 3);
                        if (!(lhs == rhs)) {
                            rep << "yang-baxter: fail at basis triple (" << i << "," << j << ","
                                << k << ")\n";
                            found = true;
                        }
                    }
            if (!found) rep << "yang-baxter: fail\n";
        }
    } catch (const FieldError& e) {
        rep << "parse: fail (" << e.what() << ")\n";
        pass = false;
    }
    rep << (pass ? "check: pass\n" : "check: fail\n");
    emit(cfg, rep.str());
    return pass ? 0 : 2;
}

int cmd_table(const RunConfig& cfg) {
    BraidedVectorSpace V = load_spec(cfg);
    FiltrationTable t = run_filtration(V, cfg);
    validate_table(t);
    emit(cfg, cfg.format == "json" ? table_to_json(t) : table_to_tsv(t));
    return 0;
}

int cmd_hurwitz(const RunConfig& cfg) {
    if (cfg.spec_path.empty()) throw FieldError("--spec is required");
    auto [G, cls] = parse_group_class_spec(slurp(cfg.spec_path));
    HurwitzReport rep = weight_decomposition(G, cls, cfg.nmax, homology_options(cfg));
    if (!cfg.bound_delta.empty() || !cfg.bound_c.empty() || cfg.strict) {
        if (cfg.bound_delta.empty() || cfg.bound_c.empty())
            throw FieldError("bound checking needs both --bound-delta and --bound-c");
        BoundConstants bc;
        bc.delta = parse_fraction(cfg.bound_delta);
        bc.c = parse_fraction(cfg.bound_c);
        if (bc.c >= 1 || bc.c < 0 || bc.delta <= 0)
            throw FieldError("bound constants need 0 <= c < 1 and delta > 0");
        bc.epsilon = bc.delta / (1 - bc.c);
        check_weight_bound(rep, bc, cfg.strict);
    }
    emit(cfg, cfg.format == "json" ? hurwitz_to_json(rep) : hurwitz_to_tsv(rep));
    return 0;
}

int cmd_stats(const RunConfig& cfg) {
    BraidedVectorSpace V = load_spec(cfg);
    WeightStatistic ws = concentration_report(V, cfg.nmax);
    emit(cfg, cfg.format == "json" ? stats_to_json(ws, cfg.decimal)
                                   : stats_to_tsv(ws, cfg.decimal));
    return 0;
}

int cmd_nichols(const RunConfig& cfg) {
    BraidedVectorSpace V = load_spec(cfg);
    int bound = cfg.nmax_given ? cfg.nmax : 8;
    NicholsProfile p = nichols_profile(V, bound);
    emit(cfg, cfg.format == "json" ? profile_to_json(p) : profile_to_tsv(p));
    return 0;
}

void add_shared(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--spec", cfg.spec_path, "Braiding description file (JSON)");
    sub->add_option("--nmax", cfg.nmax, "Top tensor degree")
        ->check(CLI::NonNegativeNumber)
        ->each([&cfg](const std::string&) { cfg.nmax_given = true; });
    sub->add_option("--filtration", cfg.filtration,
                    "Filtration: wordlen | weight | weighted:<c1,c2,...>");
    sub->add_option("--algebra", cfg.algebra, "Algebra side: tensor | shuffle | nichols");
    sub->add_option("--mode", cfg.mode, "Rank arithmetic: exact | modular");
    sub->add_option("--primes", cfg.primes, "Primes used by modular certification");
    sub->add_option("--seed", cfg.seed, "Seed for modular prime sampling");
    sub->add_option("--format", cfg.format, "Output format: tsv | json")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "Worker cap; outputs are canonical regardless")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--force", cfg.force, "Override the memory guard");
    sub->add_flag("--decimal", cfg.decimal, "Render rationals as 6-significant-digit decimals");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with braided vector spaces: filtration tables, "
                 "cover cohomology, weight statistics"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value configuration file, one [section] per subcommand; flags win");
    RunConfig cfg;

    CLI::App* check = app.add_subcommand("check", "Validate a braiding description");
    CLI::App* table = app.add_subcommand("table", "Emit a filtration table");
    CLI::App* hurwitz =
        app.add_subcommand("hurwitz", "Betti numbers and weight decomposition of covers");
    hurwitz->add_option("--bound-delta", cfg.bound_delta,
                        "Weight-bound constant delta (rational, e.g. 1/5)");
    hurwitz->add_option("--bound-c", cfg.bound_c, "Weight-bound constant c (rational)");
    hurwitz->add_flag("--strict", cfg.strict, "Also assert the strict full-weight clause");
    CLI::App* stats = app.add_subcommand("stats", "Average-weight statistics");
    CLI::App* nichols =
        app.add_subcommand("nichols", "Graded profile of the degree-1-generated subalgebra");
    for (CLI::App* sub : {check, table, hurwitz, stats, nichols}) add_shared(sub, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (hurwitz->parsed()) return cmd_hurwitz(cfg);
        if (stats->parsed()) return cmd_stats(cfg);
        if (nichols->parsed()) return cmd_nichols(cfg);
    } catch (const GateError& e) {
        std::cerr << "gate failure: " << e.what() << "\n";
        return 4;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
