// Command line front end: golden table checks, the census, case and family
// reports, tree queries and the discreteness tests, with JSON/CSV output.
// Exit codes: 0 all checks pass, 2 golden table mismatch, 3 precision
// indeterminate, 1 other errors.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mumford/cases.hpp"
#include "mumford/discrete.hpp"
#include "mumford/errors.hpp"
#include "mumford/families.hpp"
#include "mumford/hurwitz.hpp"
#include "mumford/tables.hpp"
#include "mumford/tree.hpp"

using nlohmann::json;
using namespace mumford;

namespace {

struct Options {
    long p = 2;
    int t = 1;
    long precision = kDefaultPrecision;
    bool as_json = false;
    bool as_csv = false;
    int window = 3;
};

void emit(const Options& opt, const json& payload,
          const std::function<void()>& human,
          const std::function<void()>& csv = {}) {
    if (opt.as_json) {
        std::cout << payload.dump(2) << "\n";
    } else if (opt.as_csv && csv) {
        csv();
    } else {
        human();
    }
}

int cmd_table(const Options& opt, const std::string& name) {
    json fresh = tables::regenerate(name);
    auto diffs = tables::diff_table(name);
    json payload;
    payload["command"] = "table " + name;
    payload["table"] = fresh;
    payload["mismatches"] = diffs;
    payload["ok"] = diffs.empty();
    emit(opt, payload,
         [&] {
             if (name == "gnu") {
                 std::cout << "| order | groups | nonsolvable |\n|---|---|---|\n";
                 for (auto it = fresh["gnu"].begin(); it != fresh["gnu"].end(); ++it)
                     std::cout << "| " << it.key() << " | " << it.value() << " | "
                               << fresh["nonsolvable"][it.key()] << " |\n";
             } else if (name == "6.3") {
                 std::cout << "| case | a | b | mu |\n|---|---|---|---|\n";
                 for (const auto& r : fresh["rows"])
                     std::cout << "| " << r["case"].get<std::string>() << " | "
                               << r["a"].get<std::string>() << " | "
                               << r["b"].get<std::string>() << " | "
                               << r["mu"].get<std::string>() << " |\n";
             } else {
                 std::cout << "| N_v1 | N_e | N_v0 | relation | mu |\n|---|---|---|---|---|\n";
                 for (const auto& r : fresh["rows"]) {
                     std::cout << "| " << r["v1"].get<std::string>() << " | "
                               << r["e"].get<std::string>() << " | "
                               << r["v0"].get<std::string>() << " | "
                               << r["relation"].get<std::string>() << " |";
                     for (const auto& m : r["mu"]) std::cout << " " << m.get<std::string>();
                     std::cout << " |\n";
                 }
             }
             for (const auto& d : diffs) std::cout << "MISMATCH: " << d << "\n";
             std::cout << (diffs.empty() ? "table " + name + ": all rows match\n"
                                         : "table " + name + ": MISMATCH\n");
         },
         [&] {
             if (name == "gnu") {
                 std::cout << "order,groups,nonsolvable\n";
                 for (auto it = fresh["gnu"].begin(); it != fresh["gnu"].end(); ++it)
                     std::cout << it.key() << "," << it.value() << ","
                               << fresh["nonsolvable"][it.key()] << "\n";
             } else if (name == "6.3") {
                 std::cout << "case,a,b,mu\n";
                 for (const auto& r : fresh["rows"])
                     std::cout << '"' << r["case"].get<std::string>() << "\","
                               << r["a"].get<std::string>() << "," << r["b"].get<std::string>()
                               << "," << r["mu"].get<std::string>() << "\n";
             } else {
                 std::cout << "v1,e,v0,relation,mu\n";
                 for (const auto& r : fresh["rows"]) {
                     std::cout << r["v1"].get<std::string>() << "," << r["e"].get<std::string>()
                               << "," << r["v0"].get<std::string>() << ","
                               << r["relation"].get<std::string>() << ",";
                     for (size_t i = 0; i < r["mu"].size(); i++)
                         std::cout << (i ? ";" : "") << r["mu"][i].get<std::string>();
                     std::cout << "\n";
                 }
             }
         });
    return diffs.empty() ? 0 : 2;
}

int cmd_census(const Options& opt, bool regen) {
    CensusReport rep = census_exceptional(tables::gnu_counts(regen),
                                          tables::nonsolvable_counts(regen));
    json payload;
    payload["command"] = "census";
    payload["perGenus"] = json::array();
    for (const auto& row : rep.per_genus) {
        json r;
        r["g"] = row.g.str();
        r["orders"] = json::array();
        for (const auto& n : row.orders) r["orders"].push_back(n.str());
        r["count"] = row.group_count;
        payload["perGenus"].push_back(r);
    }
    payload["total"] = rep.total;
    payload["nonsolvable"] = json::object();
    for (const auto& [n, c] : rep.nonsolvable)
        payload["nonsolvable"][n.str()] = c;
    payload["nonsolvableTotal"] = rep.nonsolvable_total;

    bool ok = rep.total == 134 && rep.nonsolvable_total == 1 &&
              rep.nonsolvable.size() == 1 && rep.nonsolvable.begin()->first == 60;
    payload["ok"] = ok;
    emit(opt, payload,
         [&] {
             std::cout << "| g | orders | groups |\n|---|---|---|\n";
             for (const auto& row : rep.per_genus) {
                 std::cout << "| " << row.g << " | ";
                 for (size_t i = 0; i < row.orders.size(); i++)
                     std::cout << (i ? " " : "") << row.orders[i];
                 std::cout << " | " << row.group_count << " |\n";
             }
             std::cout << "total: " << rep.total
                       << ", nonsolvable: " << rep.nonsolvable_total << " (order "
                       << (rep.nonsolvable.empty() ? std::string("-")
                                                   : rep.nonsolvable.begin()->first.str())
                       << ")\n";
         },
         [&] {
             std::cout << "g,orders,groups\n";
             for (const auto& row : rep.per_genus) {
                 std::cout << row.g << ",\"";
                 for (size_t i = 0; i < row.orders.size(); i++)
                     std::cout << (i ? " " : "") << row.orders[i];
                 std::cout << "\"," << row.group_count << "\n";
             }
         });
    if (!ok) throw table_mismatch_error("census totals disagree with the expected 134/60");
    return 0;
}

int cmd_case(const Options& opt, const std::vector<std::string>& tokens) {
    CaseId id = parse_case(tokens);
    std::string rep = case_report(id);
    json payload = json::parse(rep);
    if (payload.contains("consistent") && !payload["consistent"].get<bool>())
        throw domain_error("internal inconsistency between mu and the branch data");
    emit(opt, payload, [&] {
        std::cout << "case " << id.to_string() << "\n";
        std::cout << "  mu = " << payload["mu"].get<std::string>() << "\n";
        if (payload.contains("a"))
            std::cout << "  (a, b) = (" << payload["a"].get<std::string>() << ", "
                      << payload["b"].get<std::string>() << ")\n";
        if (payload["attains_bound"].get<bool>()) {
            std::cout << "  verdict: attains bound at genus";
            for (const auto& g : payload["attained_genera"])
                std::cout << " " << g.get<std::string>();
            std::cout << "\n";
        } else {
            std::cout << "  verdict: below bound for all genera\n";
        }
        std::cout << "  lambda0: " << payload["lambda0"].get<std::string>() << "\n";
    });
    return 0;
}

int cmd_family(const Options& opt, const std::string& kind,
               const std::vector<long>& args) {
    FamilyRecord rec;
    if (kind == "asm") {
        if (args.size() != 2) throw domain_error("usage: family asm p t");
        rec = asm_family(args[0], (int)args[1]);
    } else if (kind == "drinfeld") {
        if (args.size() < 2) throw domain_error("usage: family drinfeld q deg...");
        long q = args[0];
        long p = 0;
        int t = 0;
        for (long d = 2; d <= q; d++)
            if (q % d == 0) {
                p = d;
                long m = q;
                while (m % d == 0) m /= d, t++;
                if (m != 1) throw domain_error("q must be a prime power");
                break;
            }
        std::vector<int> degs(args.begin() + 1, args.end());
        rec = drinfeld_family(p, t, degs);
    } else if (kind == "icosa") {
        if (args.size() != 1) throw domain_error("usage: family icosa p");
        rec = icosahedral_family(args[0]);
    } else {
        throw domain_error("unknown family: " + kind);
    }
    json payload = json::parse(family_report(rec));
    emit(opt, payload, [&] {
        std::cout << rec.name << ": g = " << rec.genus << ", |Aut| = " << rec.aut_order
                  << " (" << rec.aut_description << ")\n";
        std::cout << "  bound: " << rec.bound_verdict << ", stratum dim " << rec.stratum_dim
                  << "\n";
        for (const auto& c : rec.caveats) std::cout << "  note: " << c << "\n";
    });
    return 0;
}

LocalElement parse_elem(const Options& opt, const std::string& text) {
    FqSpecPtr spec = make_field(opt.p, opt.t);
    LocalElement x = parse_local_element(spec, text);
    if (opt.precision != kDefaultPrecision && x.is_exact())
        x = x + LocalElement::zero_to_precision(spec, opt.precision);
    return x;
}

int cmd_tree(const Options& opt, const std::string& sub,
             const std::vector<std::string>& args) {
    FqSpecPtr spec = make_field(opt.p, opt.t);
    WindowSpec w{TreeVertex::base(spec), opt.window};
    json payload;
    payload["command"] = "tree " + sub;
    if (sub == "window") {
        TreeWindow tw = enumerate_window(w);
        payload["window"] = json::parse(tw.to_json());
        emit(opt, payload, [&] { std::cout << tw.to_dot() << "\n"; });
    } else if (sub == "mirror") {
        if (args.size() != 1) throw domain_error("usage: tree mirror <element>");
        Mat2 g = Mat2::translation(parse_elem(opt, args[0]));
        TreeWindow tw = mirror(g, w);
        payload["mirror"] = json::parse(tw.to_json());
        emit(opt, payload, [&] {
            std::cout << "mirror of translation by " << args[0] << " in radius "
                      << opt.window << ": " << tw.vertices.size() << " vertices\n";
            for (const auto& v : tw.vertices) std::cout << "  " << v.to_string() << "\n";
        });
    } else if (sub == "distance") {
        if (args.size() != 2) throw domain_error("usage: tree distance <j1> <j2> (standard apartment)");
        TreeVertex a = TreeVertex::standard(spec, std::stol(args[0]));
        TreeVertex b = TreeVertex::standard(spec, std::stol(args[1]));
        payload["distance"] = tree_distance(a, b);
        emit(opt, payload, [&] {
            std::cout << "d(" << a.to_string() << ", " << b.to_string()
                      << ") = " << tree_distance(a, b) << "\n";
        });
    } else if (sub == "median") {
        if (args.size() != 3) throw domain_error("usage: tree median <x> <y> <z>");
        auto pt = [&](const std::string& s) {
            return s == "inf" ? ProjPoint::infinity(spec)
                              : ProjPoint::finite(parse_elem(opt, s));
        };
        TreeVertex m = median(pt(args[0]), pt(args[1]), pt(args[2]));
        payload["median"] = m.to_string();
        emit(opt, payload, [&] { std::cout << m.to_string() << "\n"; });
    } else {
        throw domain_error("unknown tree subcommand: " + sub);
    }
    return 0;
}

int cmd_discrete(const Options& opt, long p, int t, long shift, int len) {
    UnipotentPair pair = asm_pair(p, t, shift);
    FreeProductReport fp = free_product_discrete(pair.e_gens, pair.h_gens);
    json payload;
    payload["command"] = "discrete asm";
    payload["disjoint"] = fp.discrete;
    payload["witnesses"] = fp.witness.empty() ? json::array() : json::array({fp.witness});
    payload["conjugated"] = fp.conjugated;
    if (fp.discrete && len > 0) {
        auto gens = schottky_commutators(pair.e_gens, pair.gamma);
        auto wr = free_words_check(gens, len);
        payload["schottkyRank"] = gens.size();
        payload["freenessTo"] = wr.violations.empty() ? len : 0;
        payload["violations"] = wr.violations;
        payload["indeterminate"] = wr.indeterminate;
    }
    emit(opt, payload, [&] {
        std::cout << "isometric circles " << (fp.discrete ? "disjoint" : "overlap");
        if (!fp.witness.empty()) std::cout << " at " << fp.witness;
        std::cout << "\n";
        if (payload.contains("freenessTo"))
            std::cout << "schottky generators: " << payload["schottkyRank"]
                      << ", free to length " << payload["freenessTo"] << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around automorphisms of Mumford curves"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--p", opt.p, "residue characteristic");
    app.add_option("--t", opt.t, "extension degree, q = p^t");
    app.add_option("--precision", opt.precision, "working precision in pi-digits");
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_flag("--csv", opt.as_csv, "CSV output");
    app.add_option("--window", opt.window, "tree window radius");

    std::string table_name;
    auto* tbl = app.add_subcommand("table", "regenerate a golden table and diff it");
    tbl->add_option("name", table_name, "5.4.1, 5.4.2, 5.4.3, 6.3 or gnu")->required();

    bool census_regen = false;
    auto* cen = app.add_subcommand("census", "exceptional group census over genus 5..8");
    cen->add_flag("--regen", census_regen, "recount groups instead of using cached data");

    std::vector<std::string> case_tokens;
    auto* cas = app.add_subcommand("case", "report on a catalog case");
    cas->add_option("descriptor", case_tokens, "e.g. A1 p=3 t=1 t1=2 PGL")->required();

    std::string family_kind;
    std::vector<long> family_args;
    auto* fam = app.add_subcommand("family", "asm / drinfeld / icosa record");
    fam->add_option("kind", family_kind)->required();
    fam->add_option("args", family_args, "asm: p t; drinfeld: q deg...; icosa: p");

    std::string tree_sub;
    std::vector<std::string> tree_args;
    auto* tre = app.add_subcommand("tree", "Bruhat-Tits tree queries");
    tre->add_option("sub", tree_sub, "window, mirror, distance, median")->required();
    tre->add_option("args", tree_args);

    long d_p = 3, d_shift = -1;
    int d_t = 1, d_len = 4;
    auto* dis = app.add_subcommand("discrete", "ASM discreteness construction");
    std::string d_kind;
    dis->add_option("kind", d_kind, "asm")->required();
    dis->add_option("p", d_p)->required();
    dis->add_option("t", d_t)->required();
    dis->add_option("shiftVal", d_shift)->required();
    dis->add_option("L", d_len);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tbl->parsed()) return cmd_table(opt, table_name);
        if (cen->parsed()) return cmd_census(opt, census_regen);
        if (cas->parsed()) return cmd_case(opt, case_tokens);
        if (fam->parsed()) return cmd_family(opt, family_kind, family_args);
        if (tre->parsed()) return cmd_tree(opt, tree_sub, tree_args);
        if (dis->parsed()) {
            if (d_kind != "asm") throw domain_error("unknown discrete construction: " + d_kind);
            return cmd_discrete(opt, d_p, d_t, d_shift, d_len);
        }
    } catch (const table_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
