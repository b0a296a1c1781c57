// Python bindings. Heavyweight exact types stay on the C++ side; the module
// passes strings (element text, JSON reports) across the boundary so the
// python layer never has to marshal Laurent series or big rationals.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mumford/cases.hpp"
#include "mumford/discrete.hpp"
#include "mumford/families.hpp"
#include "mumford/grouptree.hpp"
#include "mumford/hurwitz.hpp"
#include "mumford/tables.hpp"
#include "mumford/tree.hpp"

namespace py = pybind11;
using namespace mumford;

namespace {

LocalElement parse(long p, int t, const std::string& text) {
    return parse_local_element(make_field(p, t), text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations around automorphisms of Mumford curves";

    py::register_exception<precision_error>(m, "PrecisionError");
    py::register_exception<table_mismatch_error>(m, "TableMismatchError");

    // local field arithmetic, string in / string out
    m.def("element_add", [](long p, int t, const std::string& a, const std::string& b) {
        return (parse(p, t, a) + parse(p, t, b)).to_string();
    });
    m.def("element_mul", [](long p, int t, const std::string& a, const std::string& b) {
        return (parse(p, t, a) * parse(p, t, b)).to_string();
    });
    m.def("element_valuation", [](long p, int t, const std::string& a) -> py::object {
        auto v = parse(p, t, a).valuation();
        if (!v) return py::none();
        return py::int_(*v);
    });

    // tree queries
    m.def("tree_distance", [](long p, int t, long j1, long j2) {
        auto spec = make_field(p, t);
        return tree_distance(TreeVertex::standard(spec, j1), TreeVertex::standard(spec, j2));
    });
    m.def("tree_window", [](long p, int t, int radius) {
        WindowSpec w{TreeVertex::base(make_field(p, t)), radius};
        return enumerate_window(w).to_json();
    });
    m.def("translation_mirror", [](long p, int t, const std::string& x, int radius) {
        auto spec = make_field(p, t);
        WindowSpec w{TreeVertex::base(spec), radius};
        return mirror(Mat2::translation(parse(p, t, x)), w).to_json();
    });

    // group trees and the genus bookkeeping
    m.def("tree_mu", [](const std::string& tree_json, long p) {
        return mu(GroupTree::from_json(tree_json, p)).str();
    });
    m.def("tree_genus", [](const std::string& tree_json, long p, const std::string& order) {
        return kps_genus(GroupTree::from_json(tree_json, p), Int(order)).str();
    });
    m.def("herrlich_dim", [](const std::string& tree_json, long p, int f) {
        return herrlich_dim(GroupTree::from_json(tree_json, p), f);
    });

    // hurwitz bound machinery
    m.def("hurwitz_genus", [](const std::string& order, const std::vector<std::pair<std::string, std::string>>& branch) {
        CoverData c;
        c.group_order = Int(order);
        for (const auto& [e, ep] : branch) c.branch.push_back({Int(e), Int(ep)});
        return hurwitz_genus(c).str();
    });
    m.def("compare_to_bound", [](const std::string& n, const std::string& g) {
        int s = compare_to_bound(Int(n), Int(g));
        return std::string(s < 0 ? "less" : s > 0 ? "greater" : "equal");
    });
    m.def("exceptional_orders", [](const std::string& g) {
        std::vector<std::string> out;
        for (const auto& n : exceptional_orders(Int(g))) out.push_back(n.str());
        return out;
    });

    // case catalog and curve families, full JSON reports
    m.def("case_report", [](const std::vector<std::string>& tokens) {
        return case_report(parse_case(tokens));
    });
    m.def("family_asm", [](long p, int t) { return family_report(asm_family(p, t)); });
    m.def("family_drinfeld", [](long p, int t, const std::vector<int>& degs) {
        return family_report(drinfeld_family(p, t, degs));
    });
    m.def("family_icosa", [](long p) { return family_report(icosahedral_family(p)); });

    // discreteness checks
    m.def("asm_discrete", [](long p, int t, long shift, int len) {
        UnipotentPair pair = asm_pair(p, t, shift);
        FreeProductReport fp = free_product_discrete(pair.e_gens, pair.h_gens);
        py::dict out;
        out["disjoint"] = fp.discrete;
        out["witness"] = fp.witness;
        if (fp.discrete && len > 0) {
            auto gens = schottky_commutators(pair.e_gens, pair.gamma);
            auto wr = free_words_check(gens, len);
            out["rank"] = gens.size();
            out["violations"] = wr.violations;
            out["indeterminate"] = wr.indeterminate;
        }
        return out;
    });

    // golden tables and the census
    m.def("regenerate_table", [](const std::string& name) { return tables::regenerate(name).dump(); });
    m.def("check_table", [](const std::string& name) { tables::check_table(name); });
    m.def("diff_table", [](const std::string& name) { return tables::diff_table(name); });
    m.def("census", [](bool regen) {
        CensusReport rep = census_exceptional(tables::gnu_counts(regen),
                                              tables::nonsolvable_counts(regen));
        py::dict out;
        py::list rows;
        for (const auto& row : rep.per_genus) {
            py::dict r;
            r["g"] = row.g.str();
            py::list orders;
            for (const auto& n : row.orders) orders.append(n.str());
            r["orders"] = orders;
            r["count"] = row.group_count;
            rows.append(r);
        }
        out["per_genus"] = rows;
        out["total"] = rep.total;
        out["nonsolvable_total"] = rep.nonsolvable_total;
        return out;
    }, py::arg("regen") = false);
}
