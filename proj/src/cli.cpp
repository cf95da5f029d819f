#include "hallinv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallinv/braids.hpp"
#include "hallinv/census.hpp"
#include "hallinv/error.hpp"
#include "hallinv/field.hpp"
#include "hallinv/fox.hpp"
#include "hallinv/hall.hpp"
#include "hallinv/oracle.hpp"

namespace hallinv {

using Json = nlohmann::ordered_json;

namespace {

Json big(const BigInt& v)
{
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json beta_json(const BettiDistribution& b)
{
    Json counts = Json::object();
    for (const auto& [d, c] : b.counts) counts[std::to_string(d)] = big(c);
    return counts;
}

std::vector<long> parse_longs(const std::string& text, const std::string& what)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw InputError(what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw InputError(what + " is empty");
    return out;
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Target {
    enum Kind { Abelian, Mpq, Table } kind = Abelian;
    std::vector<long> orders;
    long p = 0, q = 0;
    FiniteGroupTable table;
    std::string label;
};

FiniteGroupTable read_table_file(const std::string& path)
{
    std::istringstream in(read_file(path));
    long n = 0;
    if (!(in >> n) || n < 1 || n > 4096) throw InputError("table file must start with the group order");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (auto& row : mul)
        for (auto& v : row)
            if (!(in >> v)) throw InputError("table file has fewer than N*N entries");
    return FiniteGroupTable(std::move(mul), path);
}

Target parse_target(const std::string& spec)
{
    Target t;
    t.label = spec;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "s3") {
        t.kind = Target::Mpq;
        t.p = 2;
        t.q = 3;
    } else if (kind == "a4") {
        t.kind = Target::Mpq;
        t.p = 3;
        t.q = 2;
    } else if (kind == "ab") {
        t.kind = Target::Abelian;
        t.orders = parse_longs(arg, "abelian target");
        for (long o : t.orders)
            if (o < 1) throw InputError("abelian target orders must be positive");
    } else if (kind == "mpq") {
        auto v = parse_longs(arg, "metabelian target");
        if (v.size() != 2) throw InputError("metabelian target needs mpq:p,q");
        t.kind = Target::Mpq;
        t.p = v[0];
        t.q = v[1];
        if (!is_prime(static_cast<std::uint64_t>(t.p)) || !is_prime(static_cast<std::uint64_t>(t.q)) || t.p == t.q)
            throw InputError("metabelian target needs distinct primes p and q");
    } else if (kind == "table") {
        t.kind = Target::Table;
        t.table = read_table_file(arg);
    } else {
        throw InputError("unknown target '" + spec + "': expected ab:..., mpq:p,q, s3, a4 or table:file");
    }
    return t;
}

FiniteGroupTable target_table(const Target& t)
{
    switch (t.kind) {
    case Target::Abelian: return AbelianGroupSpec::from_cyclic(t.orders).table();
    case Target::Mpq: return construct_mpqs(t.p, t.q).table;
    case Target::Table: return t.table;
    }
    return t.table;
}

BigInt table1_entry(const Presentation& P, const AbelStructure& a, std::size_t column, const BetaOptions& opts)
{
    static const std::vector<std::vector<long>> abelian = {{2}, {3}, {2, 2}, {4}, {2, 4}, {8}};
    if (column < abelian.size()) return delta_abelian(a, AbelianGroupSpec::from_cyclic(abelian[column]));
    if (column == 6) return delta_mpqs(P, 2, 3, opts);
    if (column == 7) return delta_mpqs(P, 3, 2, opts);
    return delta_mpqs(P, 3, 7, opts);
}

} // namespace

std::vector<std::string> table1_columns()
{
    return {"Z2", "Z3", "Z2^2", "Z4", "Z2+Z4", "Z8", "S3", "A4", "M3,7"};
}

std::vector<std::string> table1_default_rows()
{
    return {"F2", "F3", "F4", "F2xF1", "F2xF2", "F3xF1", "F3xF2", "S2", "S3", "S4", "N2", "N3", "N4", "N5"};
}

TableRow table1_row(const std::string& name, const BetaOptions& opts)
{
    Presentation P = fixture(name);
    AbelStructure a = abelianization(P);
    TableRow r{name, {}};
    for (std::size_t c = 0; c < table1_columns().size(); ++c) r.values.push_back(table1_entry(P, a, c, opts));
    return r;
}

std::vector<std::string> table2_columns()
{
    return {"S3", "A4", "M3,7"};
}

std::vector<std::string> table2_default_rows()
{
    return {"A123",    "A1234",   "A2134",   "A12345",  "A21345",  "A21435",  "A31425",  "A123456",
            "A213456", "A321456", "A215436", "A214356", "A312546", "A341256", "A314256", "A241536"};
}

TableRow table2_row(const std::string& name, const BetaOptions& opts)
{
    if (name.empty() || name[0] != 'A') throw InputError("table2 rows are horizontal arrangements A<perm>");
    Presentation P = fixture(name);
    return {name, {delta_mpqs(P, 2, 3, opts), delta_mpqs(P, 3, 2, opts), delta_mpqs(P, 3, 7, opts)}};
}

std::string render_table(const std::vector<std::string>& columns, const std::vector<TableRow>& rows)
{
    std::size_t w0 = 1;
    for (const auto& r : rows) w0 = std::max(w0, r.name.size());
    std::vector<std::size_t> w(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        w[c] = columns[c].size();
        for (const auto& r : rows) w[c] = std::max(w[c], r.values[c].get_str().size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w0)) << "G";
    for (std::size_t c = 0; c < columns.size(); ++c) os << "  " << std::right << std::setw(static_cast<int>(w[c])) << columns[c];
    os << "\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(w0)) << r.name;
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << "  " << std::right << std::setw(static_cast<int>(w[c])) << r.values[c].get_str();
        os << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homological invariants of finitely presented groups", "hallinv"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string in_file, fixture_name, perm;
    std::string format = "json";
    unsigned threads = 0;
    bool deterministic = false, verbose = false;
    unsigned long long budget = 100000000ULL;
    auto add_input = [&](CLI::App* sub) {
        auto* a = sub->add_option("--in", in_file, "presentation file ('-' for stdin)");
        auto* b = sub->add_option("--fixture", fixture_name, "built-in presentation");
        auto* c = sub->add_option("--perm", perm, "horizontal arrangement permutation, e.g. 31425");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--threads", threads, "worker threads (0 = all cores)");
        sub->add_flag("--deterministic-profile", deterministic, "single-threaded run without timing output");
        sub->add_flag("--verbose", verbose, "report elapsed time on stderr");
        sub->add_option("--budget", budget, "search budget for brute-force enumeration");
    };

    auto* parse = app.add_subcommand("parse", "normalize a presentation");
    auto* abel = app.add_subcommand("abelianize", "first homology of the group");
    auto* alex = app.add_subcommand("alexander", "dump the Alexander matrix");
    long p = 0, q = 0;
    auto* beta = app.add_subcommand("beta", "Betti number distribution of index-p normal subgroups");
    beta->add_option("--p", p, "prime index")->required();
    beta->add_option("--q", q, "field characteristic (0 or a prime)")->required();
    std::string target_spec;
    auto* delta = app.add_subcommand("delta", "Hall invariant");
    delta->add_option("--target", target_spec, "ab:2,4 | mpq:p,q | s3 | a4")->required();
    long order = 0;
    std::string images;
    bool cover_oracle = false;
    auto* cover = app.add_subcommand("cover", "first Betti number of a cyclic cover");
    cover->add_option("--order", order, "order of the cyclic quotient")->required();
    cover->add_option("--images", images, "images of the generators in Z_N, comma separated")->required();
    cover->add_option("--q", q, "field characteristic (0 or a prime)");
    cover->add_flag("--oracle", cover_oracle, "also compute the cover homology by Fox calculus and SNF");
    long k = 0;
    bool normal = false, abelian_quotient = false, conjugacy = false;
    auto* census_cmd = app.add_subcommand("census", "low-index subgroup counts");
    census_cmd->add_option("--k", k, "index")->required();
    census_cmd->add_flag("--normal", normal, "normal subgroups");
    census_cmd->add_flag("--abelian-quotient", abelian_quotient, "normal subgroups with abelian quotient");
    census_cmd->add_flag("--conjugacy", conjugacy, "conjugacy classes (prime index)");
    auto* arr = app.add_subcommand("arr", "emit an arrangement presentation");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration");
    std::string oracle_target;
    bool oracle_cover = false;
    oracle_cmd->add_option("--target", oracle_target, "s3 | a4 | mpq:p,q | ab:... | table:file");
    oracle_cmd->add_flag("--cover", oracle_cover, "cover homology of the cyclic character given by --order/--images");
    oracle_cmd->add_option("--order", order, "order of the cyclic quotient");
    oracle_cmd->add_option("--images", images, "images of the generators in Z_N");
    std::string rows;
    auto* t1 = app.add_subcommand("table1", "Hall invariants of the standard families");
    t1->add_option("--rows", rows, "comma separated fixture names");
    auto* t2 = app.add_subcommand("table2", "Hall invariants of horizontal arrangements");
    t2->add_option("--rows", rows, "comma separated A<perm> names");

    for (auto* sub : {parse, abel, alex, beta, delta, cover, census_cmd, arr, oracle_cmd}) add_input(sub);
    for (auto* sub : {parse, abel, alex, beta, delta, cover, census_cmd, arr, oracle_cmd, t1, t2}) add_common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        BetaOptions bopts;
        bopts.threads = deterministic ? 1u : (threads ? threads : std::max(1u, std::thread::hardware_concurrency()));
        OracleOptions oopts;
        oopts.budget = budget;

        auto load = [&]() -> Presentation {
            int given = !in_file.empty() + !fixture_name.empty() + !perm.empty();
            if (given != 1) throw InputError("exactly one of --in, --fixture, --perm is required");
            if (!in_file.empty()) return parse_presentation(read_file(in_file));
            if (!fixture_name.empty()) return fixture(fixture_name);
            return fixture("A" + perm);
        };
        auto emit = [&](const Json& j, const std::string& text) {
            if (format == "json")
                out << j.dump(2) << "\n";
            else
                out << text;
        };

        if (*parse || *arr) {
            Presentation P = load();
            Json j;
            j["generators"] = P.generators;
            Json rels = Json::array();
            for (const auto& r : P.relators) rels.push_back(render_word(r, P.generators));
            j["relators"] = rels;
            if (*arr)
                out << render_presentation(P);
            else
                emit(j, render_presentation(P));
        } else if (*abel) {
            Presentation P = load();
            AbelStructure a = abelianization(P);
            Json j;
            j["free_rank"] = a.free_rank;
            j["torsion"] = a.torsion;
            std::ostringstream text;
            text << "Z^" << a.free_rank;
            for (long t : a.torsion) text << " + Z" << t;
            text << "\n";
            emit(j, text.str());
        } else if (*alex) {
            AlexanderMatrix a = alexander_matrix(load());
            Json j;
            j["rows"] = a.rows;
            j["cols"] = a.cols;
            j["free_rank"] = a.abel.free_rank;
            j["torsion"] = a.abel.torsion;
            Json entries = Json::array();
            for (std::size_t r = 0; r < a.rows; ++r)
                for (std::size_t c = 0; c < a.cols; ++c) {
                    Json terms = Json::array();
                    for (const auto& [key, coef] : a.at(r, c).terms()) terms.push_back({{"coef", coef}, {"exponents", key}});
                    if (!terms.empty()) entries.push_back({{"row", r}, {"col", c}, {"terms", terms}});
                }
            j["entries"] = entries;
            emit(j, render_alexander(a));
        } else if (*beta) {
            Presentation P = load();
            BettiDistribution b = beta_distribution(P, p, q, bopts);
            Json j;
            j["p"] = p;
            j["q"] = q;
            j["n_p"] = b.n_p;
            j["beta"] = beta_json(b);
            j["provenance"] = {{"beta", "alexander-matrix-depth-count"}};
            std::ostringstream text;
            text << "p=" << p << " q=" << q << " n_p=" << b.n_p << "\n";
            for (const auto& [d, c] : b.counts) text << d << " " << c.get_str() << "\n";
            emit(j, text.str());
        } else if (*delta) {
            Presentation P = load();
            Target t = parse_target(target_spec);
            Json j;
            j["target"] = target_spec;
            BigInt value;
            if (t.kind == Target::Abelian) {
                value = delta_abelian(abelianization(P), AbelianGroupSpec::from_cyclic(t.orders));
                j["delta"] = big(value);
                j["provenance"] = {{"delta", "abelian-partition-formula"}};
            } else if (t.kind == Target::Mpq) {
                long s = static_cast<long>(multiplicative_order(t.q, t.p));
                BettiDistribution b = beta_distribution(P, t.p, t.q, bopts);
                value = delta_mpqs(b, s);
                j["delta"] = big(value);
                j["s"] = s;
                j["beta"] = beta_json(b);
                j["provenance"] = {{"delta", "metabelian-beta-formula"}};
            } else {
                value = delta_oracle(P, t.table, oopts);
                j["delta"] = big(value);
                j["provenance"] = {{"delta", "oracle-enumeration"}};
            }
            emit(j, value.get_str() + "\n");
        } else if (*cover) {
            Presentation P = load();
            auto lambda = parse_longs(images, "--images");
            long b1 = b1_cover_cyclic(P, lambda, order, q);
            Json j;
            j["order"] = order;
            j["images"] = lambda;
            j["q"] = q;
            j["b1"] = b1;
            j["provenance"] = {{"b1", "character-depth-sum"}};
            std::string text = std::to_string(b1) + "\n";
            if (cover_oracle) {
                CoverHomology h = cover_homology(P, regular_cyclic_action(lambda, order));
                Json tors = Json::array();
                for (const auto& d : h.torsion) tors.push_back(big(d));
                j["oracle"] = {{"betti", h.betti}, {"torsion", tors}, {"b1", h.betti_mod(q)}};
                j["provenance"]["oracle"] = "fox-snf";
                text += std::to_string(h.betti_mod(q)) + "\n";
            }
            emit(j, text);
        } else if (*census_cmd) {
            Presentation P = load();
            CensusRequest req;
            req.normal = normal;
            req.abelian_quotient = abelian_quotient;
            req.conjugacy = conjugacy;
            req.all = true;
            CensusReport r = census(P, k, req, oopts);
            Json j;
            j["k"] = r.k;
            std::ostringstream text;
            auto put = [&](const char* key, const std::optional<BigInt>& v) {
                if (!v) return;
                j[key] = big(*v);
                text << key << " " << v->get_str() << "\n";
            };
            put("a_k", r.a_k);
            put("a_k_normal", r.a_k_normal);
            put("alpha_k", r.alpha_k);
            put("c_k", r.c_k);
            j["provenance"] = r.method;
            emit(j, text.str());
        } else if (*oracle_cmd) {
            Presentation P = load();
            Json j;
            std::ostringstream text;
            if (!oracle_target.empty()) {
                Target t = parse_target(oracle_target);
                FiniteGroupTable T = target_table(t);
                BigInt hom = hom_count(P, T, HomMode::All, oopts);
                BigInt epi = hom_count(P, T, HomMode::Epi, oopts);
                BigInt aut = aut_order(T);
                j["target"] = oracle_target;
                j["order"] = T.order();
                j["hom"] = big(hom);
                j["epi"] = big(epi);
                j["aut"] = big(aut);
                j["delta"] = big(exact_div(epi, aut));
                text << "hom " << hom.get_str() << "\nepi " << epi.get_str() << "\naut " << aut.get_str() << "\ndelta "
                     << exact_div(epi, aut).get_str() << "\n";
            }
            if (oracle_cover) {
                if (order < 1 || images.empty()) throw InputError("--cover needs --order and --images");
                CoverHomology h = cover_homology(P, regular_cyclic_action(parse_longs(images, "--images"), order));
                Json tors = Json::array();
                for (const auto& d : h.torsion) tors.push_back(big(d));
                j["cover"] = {{"betti", h.betti}, {"torsion", tors}};
                text << "betti " << h.betti << "\ntorsion";
                for (const auto& d : h.torsion) text << " " << d.get_str();
                text << "\n";
            }
            if (oracle_target.empty() && !oracle_cover) throw InputError("oracle needs --target or --cover");
            Json prov;
            if (!oracle_target.empty()) prov["delta"] = "brute-force";
            if (oracle_cover) prov["cover"] = "fox-snf";
            j["provenance"] = prov;
            emit(j, text.str());
        } else if (*t1 || *t2) {
            bool first = t1->parsed();
            auto names = rows.empty() ? (first ? table1_default_rows() : table2_default_rows()) : split(rows);
            auto columns = first ? table1_columns() : table2_columns();
            std::vector<TableRow> result;
            for (const auto& n : names) result.push_back(first ? table1_row(n, bopts) : table2_row(n, bopts));
            Json j;
            j["columns"] = columns;
            Json body = Json::array();
            for (const auto& r : result) {
                Json vals = Json::array();
                for (const auto& v : r.values) vals.push_back(big(v));
                body.push_back({{"group", r.name}, {"values", vals}});
            }
            j["rows"] = body;
            emit(j, render_table(columns, result));
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    if (verbose && !deterministic) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed " << s << " s\n";
    }
    return 0;
}

} // namespace hallinv
