#include "mumford/discrete.hpp"

#include <algorithm>
#include <functional>

#include "mumford/errors.hpp"

namespace mumford {

Disk isometric_circle(const Mat2& g) {
    // determinant-balanced representative: pi-power scaling moves v(det) by
    // even steps, so v(det) can be normalised into {0, 1}; the circle
    // |cz + d| <= 1 is read off from that representative
    long vdet = g.det().valuation().value();
    Mat2 m = g.shifted(-(vdet >= 0 ? vdet / 2 : (vdet - 1) / 2));
    Disk disk;
    if (m.c.is_exact_zero()) {
        disk.proper = false;
        disk.center = LocalElement::exact_zero(g.spec());
        return disk;
    }
    long vc = m.c.valuation().value();  // throws precision_error if unclear
    disk.proper = true;
    disk.center = -(m.d / m.c);
    disk.radius_val = -vc;
    return disk;
}

bool disks_disjoint(const Disk& a, const Disk& b) {
    if (!a.proper || !b.proper)
        throw domain_error("disjointness needs proper disks");
    LocalElement diff = a.center - b.center;
    long m = std::min(a.radius_val, b.radius_val);
    if (diff.is_exact_zero()) return false;  // concentric
    try {
        auto v = diff.valuation();
        return v && *v < m;
    } catch (const precision_error&) {
        // centers agree to working precision; if the precision reaches the
        // smaller radius the disks certainly meet
        if (diff.prec() >= m) return false;
        throw;
    }
}

namespace {

// nontrivial elements of the group generated by gens
std::vector<Mat2> nontrivial_closure(const std::vector<Mat2>& gens) {
    std::vector<Mat2> all = generated_group(gens);
    std::vector<Mat2> out;
    for (const auto& g : all)
        if (!g.is_scalar()) out.push_back(g);
    return out;
}

bool all_proper(const std::vector<Mat2>& elts) {
    for (const auto& g : elts)
        if (g.c.is_exact_zero()) return false;
    return true;
}

std::vector<Mat2> conjugate_all(const std::vector<Mat2>& elts, const Mat2& w) {
    Mat2 winv = w.adjugate();
    std::vector<Mat2> out;
    out.reserve(elts.size());
    for (const auto& g : elts) out.push_back(w * g * winv);
    return out;
}

}  // namespace

FreeProductReport free_product_discrete(const std::vector<Mat2>& gens_g,
                                        const std::vector<Mat2>& gens_h) {
    FreeProductReport rep;
    if (gens_g.empty() || gens_h.empty())
        throw domain_error("free_product_discrete needs generators for both factors");
    FqSpecPtr spec = gens_g.front().spec();

    std::vector<Mat2> gs = nontrivial_closure(gens_g);
    std::vector<Mat2> hs = nontrivial_closure(gens_h);
    if (gs.empty() || hs.empty()) {
        rep.discrete = true;  // a trivial factor makes the product a finite group
        return rep;
    }

    if (!all_proper(gs) || !all_proper(hs)) {
        // some element fixes infinity; move the configuration by a generic
        // rotation and test in the new coordinate
        std::vector<Mat2> candidates = {
            Mat2::inversion(spec),
            Mat2::lower_translation(LocalElement::from_int(spec, 1)),
            Mat2::lower_translation(LocalElement::pi_pow(spec, 1)),
            Mat2::inversion(spec) * Mat2::translation(LocalElement::from_int(spec, 1)),
            Mat2::inversion(spec) * Mat2::translation(LocalElement::pi_pow(spec, 1)),
        };
        bool moved = false;
        for (const auto& w : candidates) {
            std::vector<Mat2> gs2 = conjugate_all(gs, w);
            std::vector<Mat2> hs2 = conjugate_all(hs, w);
            if (all_proper(gs2) && all_proper(hs2)) {
                gs = std::move(gs2);
                hs = std::move(hs2);
                rep.conjugated = true;
                rep.conjugator = w;
                moved = true;
                break;
            }
        }
        if (!moved)
            throw domain_error("could not move both groups away from infinity");
    }

    std::vector<Disk> dg, dh;
    for (const auto& g : gs) dg.push_back(isometric_circle(g));
    for (const auto& h : hs) dh.push_back(isometric_circle(h));

    for (size_t i = 0; i < dg.size(); i++)
        for (size_t j = 0; j < dh.size(); j++)
            if (!disks_disjoint(dg[i], dh[j])) {
                rep.discrete = false;
                rep.witness = gs[i].to_string() + "  vs  " + hs[j].to_string();
                return rep;
            }
    rep.discrete = true;
    return rep;
}

std::vector<Mat2> schottky_commutators(const std::vector<Mat2>& gens_e,
                                       const Mat2& gamma) {
    auto ord = gamma.order_in_pgl(8);
    if (!ord || *ord != 2) throw domain_error("gamma must be an involution");
    std::vector<Mat2> es = nontrivial_closure(gens_e);
    std::vector<Mat2> out;
    out.reserve(es.size() * es.size());
    for (const auto& e1 : es)
        for (const auto& e2 : es) {
            Mat2 d = gamma * e2 * gamma;
            out.push_back(e1 * d * e1.adjugate() * d.adjugate());
        }
    return out;
}

WordProblemReport free_words_check(const std::vector<Mat2>& gens, int L) {
    if (L < 1) throw domain_error("word length bound must be >= 1");
    WordProblemReport rep;
    rep.max_length = L;
    size_t k = gens.size();
    // alphabet: 0..k-1 the generators, k..2k-1 their inverses
    std::vector<Mat2> letters = gens;
    for (const auto& g : gens) letters.push_back(g.adjugate());

    std::vector<int> word;
    std::vector<Mat2> stack;  // running prefix products
    auto describe = [&](const std::vector<int>& w) {
        std::string s;
        for (int x : w) {
            if (!s.empty()) s += ".";
            s += (x < (int)k) ? "g" + std::to_string(x)
                              : "g" + std::to_string(x - k) + "^-1";
        }
        return s;
    };
    std::function<void(int)> dfs = [&](int depth) {
        for (int x = 0; x < (int)(2 * k); x++) {
            if (!word.empty()) {
                int prev = word.back();
                if (x == (prev + (int)k) % (int)(2 * k)) continue;  // cancellation
            }
            word.push_back(x);
            Mat2 val = stack.empty() ? letters[x] : stack.back() * letters[x];
            stack.push_back(val);
            rep.words_checked++;
            try {
                if (val.is_scalar()) rep.violations.push_back(describe(word));
            } catch (const precision_error&) {
                rep.indeterminate.push_back(describe(word));
            }
            if (depth + 1 < L) dfs(depth + 1);
            stack.pop_back();
            word.pop_back();
        }
    };
    dfs(0);
    return rep;
}

UnipotentPair asm_pair(long p, int t, long shift_val) {
    FqSpecPtr spec = make_field(p, t);
    UnipotentPair pair{std::vector<Mat2>{}, Mat2::identity(spec), {}};
    for (int i = 0; i < t; i++) {
        std::vector<int> poly(i + 1, 0);
        poly[i] = 1;  // basis vector g^i of F_q over F_p
        LocalElement a = LocalElement::from_fq(spec, FqElement(spec, poly));
        pair.e_gens.push_back(Mat2::lower_translation(a));
    }
    LocalElement s = LocalElement::pi_pow(spec, shift_val);
    // gamma : z -> s - z; an involution carrying the lower unipotent group
    // at 0 to its translate fixing s
    Mat2 gamma = Mat2::identity(spec);
    gamma.a = -LocalElement::from_int(spec, 1);
    gamma.b = s;
    pair.gamma = gamma;
    for (const auto& e : pair.e_gens) pair.h_gens.push_back(gamma * e * gamma);
    return pair;
}

}  // namespace mumford
