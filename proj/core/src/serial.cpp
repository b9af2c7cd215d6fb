#include <qsh/serial.hpp>

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace qsh {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

FieldRef field_from(const json& j) {
    if (!j.contains("field")) return FieldContext::rational();
    const json& f = j.at("field");
    std::string k = f.at("field").get<std::string>();
    if (k == "rational") return FieldContext::rational();
    if (k == "cyclotomic") return FieldContext::cyclotomic(f.at("order").get<unsigned>());
    throw FieldError("unknown field descriptor: " + k);
}

Scalar scalar_from(const json& v, const FieldRef& F) {
    if (v.is_number_integer()) return Scalar::integer(F, v.get<long>());
    if (v.is_string()) return parse_scalar(v.get<std::string>(), F);
    throw FieldError("scalar entries must be integers or expression strings");
}

std::vector<std::vector<Scalar>> scalar_matrix(const json& m, const FieldRef& F) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : m) {
        std::vector<Scalar> r;
        for (const auto& e : row) r.push_back(scalar_from(e, F));
        out.push_back(std::move(r));
    }
    return out;
}

std::pair<GroupData, std::vector<int>> group_and_reps(const json& j) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : j.at("group").at("perm_generators")) {
        std::vector<int> one_line;
        for (const auto& e : g) one_line.push_back(e.get<int>());
        gens.push_back(std::move(one_line));
    }
    GroupData G = GroupData::from_permutations(gens);
    std::vector<int> reps;
    for (const auto& r : j.at("class_reps")) {
        if (r.is_number_integer()) {
            reps.push_back(r.get<int>());
        } else {
            int id = G.element_by_label(r.get<std::string>());
            if (id < 0) throw FieldError("unknown group element label: " + r.get<std::string>());
            reps.push_back(id);
        }
    }
    return {std::move(G), std::move(reps)};
}

const char* kind_name(FiltKind k) {
    switch (k) {
        case FiltKind::WordLength: return "wordlen";
        case FiltKind::WeightedWordLength: return "weighted";
        case FiltKind::Weight: return "weight";
    }
    return "?";
}

} // namespace

Scalar parse_scalar(const std::string& text, const FieldRef& F) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw FieldError("empty scalar expression");
    std::size_t pos = 0;
    Scalar total = Scalar::zero(F);
    bool first = true;
    while (pos < s.size()) {
        long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw FieldError("expected + or - in scalar expression: " + text);
        }
        if (pos >= s.size()) throw FieldError("dangling sign in scalar expression: " + text);
        auto digits = [&]() {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw FieldError("expected digits in scalar expression: " + text);
            return s.substr(start, pos - start);
        };
        mpq_class coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            saw_coef = true;
            mpz_class num(digits());
            mpz_class den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = mpz_class(digits());
                if (den == 0) throw FieldError("zero denominator in scalar expression: " + text);
            }
            coef = mpq_class(num, den);
            coef.canonicalize();
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        long zexp = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            zexp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                zexp = std::stol(digits());
            }
        } else if (!saw_coef) {
            throw FieldError("unexpected character in scalar expression: " + text);
        }
        if (sign < 0) coef = -coef;
        Scalar term = Scalar::from_mpq(F, coef);
        if (zexp > 0) {
            if (F->kind() != FieldKind::Cyclotomic)
                throw FieldError("root-of-unity symbol z needs a cyclotomic field");
            term = term * Scalar::zeta_power(F, zexp);
        }
        total += term;
        first = false;
    }
    return total;
}

BraidedVectorSpace parse_braiding_spec(const std::string& text, bool validate) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FieldError(std::string("braiding spec is not valid JSON: ") + e.what());
    }
    try {
        std::string type = j.at("type").get<std::string>();
        FieldRef F = field_from(j);
        if (type == "trivial") return BraidedVectorSpace::trivial(j.at("dim").get<int>(), F);
        if (type == "diagonal") return BraidedVectorSpace::diagonal(scalar_matrix(j.at("q"), F));
        if (type == "rack") {
            Rack rk;
            for (const auto& e : j.at("elements")) rk.labels.push_back(e.get<std::string>());
            for (const auto& row : j.at("action")) {
                std::vector<int> r;
                for (const auto& e : row) r.push_back(e.get<int>());
                rk.act.push_back(std::move(r));
            }
            const json& coc = j.at("cocycle");
            if (coc.is_array()) return BraidedVectorSpace::rack(rk, scalar_matrix(coc, F));
            return BraidedVectorSpace::rack_constant(rk, scalar_from(coc, F));
        }
        if (type == "group_class") {
            auto [G, reps] = group_and_reps(j);
            return BraidedVectorSpace::group_class(G, reps, scalar_from(j.at("cocycle"), F));
        }
        if (type == "matrix") {
            const json& R = j.at("R");
            std::size_t n2 = R.size();
            int d = int(std::lround(std::sqrt(double(n2))));
            if (std::size_t(d) * std::size_t(d) != n2)
                throw FieldError("matrix braiding must have d^2 rows");
            std::vector<SparseVec> cols(n2);
            std::size_t i = 0;
            for (const auto& row : R) {
                if (row.size() != n2) throw FieldError("matrix braiding must be square");
                std::size_t jx = 0;
                for (const auto& e : row) {
                    Scalar v = scalar_from(e, F);
                    if (!v.is_zero()) cols[jx].emplace_back(Index(i), v);
                    ++jx;
                }
                ++i;
            }
            return BraidedVectorSpace::from_matrix(d, std::move(cols), F, {}, validate);
        }
        throw FieldError("unknown braiding type: " + type);
    } catch (const json::exception& e) {
        throw FieldError(std::string("braiding spec missing or mistyped entry: ") + e.what());
    }
}

std::pair<GroupData, std::vector<int>> parse_group_class_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FieldError(std::string("braiding spec is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("type").get<std::string>() != "group_class")
            throw FieldError("this operation needs a group_class braiding description");
        auto [G, reps] = group_and_reps(j);
        std::set<int> closed;
        for (int r : reps)
            for (int e : G.conjugacy_class(r)) closed.insert(e);
        return {std::move(G), std::vector<int>(closed.begin(), closed.end())};
    } catch (const json::exception& e) {
        throw FieldError(std::string("braiding spec missing or mistyped entry: ") + e.what());
    }
}

std::string render_rational(const mpq_class& q, bool decimal) {
    if (decimal) {
        std::ostringstream os;
        os << std::setprecision(6) << q.get_d();
        return os.str();
    }
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string table_to_json(const FiltrationTable& t) {
    ordered_json out;
    out["kind"] = kind_name(t.kind);
    out["side"] = t.side == FiltSide::OnA ? "A" : "T";
    out["alphabet"] = t.alphabet;
    out["nmax"] = t.nmax();
    auto& entries = out["entries"] = ordered_json::array();
    for (int n = 0; n <= t.nmax(); ++n)
        for (const auto& [idx, dim] : t.gr_row(n))
            entries.push_back({{"n", n}, {"index", idx}, {"gr_dim", dim}});
    return out.dump(2) + "\n";
}

std::string table_to_tsv(const FiltrationTable& t) {
    std::map<int, std::map<int, long>> rows;
    for (int n = 0; n <= t.nmax(); ++n)
        for (const auto& [s, dim] : t.gr_row(n)) rows[s][n] = dim;
    std::ostringstream os;
    os << "gr";
    for (int n = 0; n <= t.nmax(); ++n) os << '\t' << n;
    os << '\n';
    for (const auto& [s, cells] : rows) {
        os << s;
        for (int n = 0; n <= t.nmax(); ++n) {
            os << '\t';
            auto it = cells.find(n);
            if (it != cells.end()) os << it->second;
        }
        os << '\n';
    }
    return os.str();
}

std::string tor_to_json(const TriGradedDims& t) {
    ordered_json out;
    auto& entries = out["entries"] = ordered_json::array();
    for (const auto& [key, dim] : t.entries)
        entries.push_back({{"m", key[0]}, {"n", key[1]}, {"w", key[2]}, {"dim", dim}});
    return out.dump(2) + "\n";
}

std::string pages_to_json(const SpectralSequencePages& ss) {
    ordered_json out;
    out["pmin"] = ss.pmin;
    out["pmax"] = ss.pmax;
    out["stabilized_at"] = ss.stabilized_at;
    auto& pages = out["pages"] = ordered_json::array();
    for (std::size_t r = 0; r < ss.pages.size(); ++r) {
        ordered_json page;
        page["r"] = r + 1;
        auto& entries = page["entries"] = ordered_json::array();
        for (const auto& [pk, dim] : ss.pages[r])
            entries.push_back({{"p", pk.first}, {"k", pk.second}, {"dim", dim}});
        pages.push_back(std::move(page));
    }
    auto& ranks = out["dr_ranks"] = ordered_json::array();
    for (std::size_t r = 0; r < ss.dr_ranks.size(); ++r) {
        ordered_json page;
        page["r"] = r + 1;
        auto& entries = page["entries"] = ordered_json::array();
        for (const auto& [pk, rank] : ss.dr_ranks[r])
            entries.push_back({{"p", pk.first}, {"k", pk.second}, {"rank", rank}});
        ranks.push_back(std::move(page));
    }
    auto& einf = out["einf"] = ordered_json::array();
    for (const auto& [pk, dim] : ss.einf)
        einf.push_back({{"p", pk.first}, {"k", pk.second}, {"dim", dim}});
    out["findings"] = ss.findings;
    return out.dump(2) + "\n";
}

std::string hurwitz_to_json(const HurwitzReport& rep) {
    ordered_json out;
    out["group"] = rep.group;
    out["class"] = rep.class_labels;
    out["nmax"] = rep.nmax;
    auto& betti = out["betti"] = ordered_json::array();
    for (const auto& [jn, dim] : rep.betti)
        betti.push_back({{"j", jn.first}, {"n", jn.second}, {"dim", dim}});
    auto& orbits = out["orbits"] = ordered_json::array();
    for (const auto& [n, count] : rep.orbit_counts) {
        auto it = rep.full_monodromy_orbits.find(n);
        orbits.push_back({{"n", n},
                          {"orbits", count},
                          {"full_monodromy", it == rep.full_monodromy_orbits.end() ? 0 : it->second}});
    }
    auto& rows = out["rows"] = ordered_json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"i", r.i},
                        {"m", r.m},
                        {"w", r.w},
                        {"frob_weight", r.frob_weight},
                        {"dim", r.dim},
                        {"bound", r.bound}});
    out["findings"] = rep.findings;
    return out.dump(2) + "\n";
}

std::string hurwitz_to_tsv(const HurwitzReport& rep) {
    std::ostringstream os;
    os << "n\ti\tm\tw\tfrob_weight\tdim\tbound\n";
    for (const auto& r : rep.rows)
        os << r.n << '\t' << r.i << '\t' << r.m << '\t' << r.w << '\t' << r.frob_weight << '\t'
           << r.dim << '\t' << r.bound << '\n';
    return os.str();
}

std::string stats_to_json(const WeightStatistic& ws, bool decimal) {
    ordered_json out;
    auto& a = out["a"] = ordered_json::array();
    for (const auto& v : ws.a) a.push_back(render_rational(v, decimal));
    auto& aon = out["a_over_n"] = ordered_json::array();
    for (const auto& v : ws.a_over_n) aon.push_back(render_rational(v, decimal));
    out["c_estimate"] = render_rational(ws.c_estimate, decimal);
    out["monotone_ok"] = ws.monotone_ok;
    out["superadditive_ok"] = ws.superadditive_ok;
    return out.dump(2) + "\n";
}

std::string stats_to_tsv(const WeightStatistic& ws, bool decimal) {
    std::ostringstream os;
    os << "n\ta\ta_over_n\n";
    for (std::size_t n = 0; n < ws.a.size(); ++n) {
        os << n << '\t' << render_rational(ws.a[n], decimal) << '\t';
        if (n >= 1 && n - 1 < ws.a_over_n.size()) os << render_rational(ws.a_over_n[n - 1], decimal);
        os << '\n';
    }
    os << "c_estimate\t" << render_rational(ws.c_estimate, decimal) << "\t\n";
    os << "monotone_ok\t" << (ws.monotone_ok ? "true" : "false") << "\t\n";
    os << "superadditive_ok\t" << (ws.superadditive_ok ? "true" : "false") << "\t\n";
    return os.str();
}

std::string profile_to_json(const NicholsProfile& p) {
    ordered_json out;
    out["finite"] = p.finite;
    out["max_degree"] = p.max_degree;
    out["total"] = p.total;
    out["dims"] = p.dims;
    return out.dump(2) + "\n";
}

std::string profile_to_tsv(const NicholsProfile& p) {
    std::ostringstream os;
    os << "degree\tdim\n";
    for (std::size_t n = 0; n < p.dims.size(); ++n) os << n << '\t' << p.dims[n] << '\n';
    os << "finite\t" << (p.finite ? "true" : "false") << '\n';
    os << "max_degree\t" << p.max_degree << '\n';
    os << "total\t" << p.total << '\n';
    return os.str();
}

} // namespace qsh
