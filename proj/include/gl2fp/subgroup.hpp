#pragma once

// Finitely generated subgroups of GL2(F_p): closure construction, the named
// subgroups (Cartan, Borel, normalizers) and classification of arbitrary
// subgroups into the maximal-subgroup taxonomy, with homothety-index
// extraction.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gl2fp/fp.hpp"
#include "gl2fp/mat2.hpp"

namespace gl2fp {

/// Thrown when a computation exceeds a configured size budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A subgroup of GL2(F_p) materialized as its full element set, together
/// with the generators it was built from.
class Subgroup {
public:
    /// `elements` must already be closed under product and inverse and
    /// contain the identity (as produced by `generate`).
    Subgroup(PrimeModulus mod, std::vector<Mat2> generators, std::vector<Mat2> elements)
        : mod_(mod), generators_(std::move(generators)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        index_.reserve(elements_.size() * 2);
        for (const Mat2& m : elements_) index_.insert(m);
        if (!index_.count(Mat2::identity(mod_)))
            throw std::invalid_argument("element set lacks the identity");
    }

    PrimeModulus modulus() const { return mod_; }
    std::uint32_t p() const { return mod_.value(); }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<Mat2>& generators() const { return generators_; }
    const std::vector<Mat2>& elements() const { return elements_; }
    bool contains(const Mat2& m) const { return index_.count(m) != 0; }

private:
    PrimeModulus mod_;
    std::vector<Mat2> generators_;
    std::vector<Mat2> elements_;
    std::unordered_set<Mat2> index_;
};

namespace detail {

inline std::uint64_t gl2_order_saturated(std::uint32_t p) {
    unsigned __int128 p2 = static_cast<unsigned __int128>(p) * p;
    unsigned __int128 full = (p2 - 1) * (p2 - p);
    unsigned __int128 maxv = ~static_cast<std::uint64_t>(0);
    return static_cast<std::uint64_t>(full > maxv ? maxv : full);
}

inline std::uint64_t sl2_order(std::uint32_t p) {
    return static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1);
}

}  // namespace detail

/// Smallest subgroup containing `gens`; empty input yields the trivial group.
/// The closure is aborted with `resource_error` once it exceeds `element_cap`
/// (0 means the whole-group order, so the default never triggers).
inline Subgroup generate(PrimeModulus mod, const std::vector<Mat2>& gens, std::uint64_t element_cap = 0) {
    for (const Mat2& g : gens)
        if (g.modulus() != mod) throw std::invalid_argument("generator modulus mismatch");
    std::uint64_t cap = element_cap == 0 ? detail::gl2_order_saturated(mod.value()) : element_cap;

    std::unordered_set<Mat2> seen;
    std::deque<Mat2> work;
    Mat2 id = Mat2::identity(mod);
    seen.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        Mat2 x = work.front();
        work.pop_front();
        for (const Mat2& g : gens) {
            Mat2 y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw resource_error("subgroup closure exceeds element cap");
                work.push_back(y);
            }
        }
    }
    return Subgroup(mod, gens, std::vector<Mat2>(seen.begin(), seen.end()));
}

/// Diagonal matrices w.r.t. the standard basis; order (p-1)^2.
inline Subgroup build_split_cartan(PrimeModulus mod) {
    std::uint32_t g = primitive_root(mod).value();
    return generate(mod, {Mat2::diagonal(mod, g, 1), Mat2::diagonal(mod, 1, g)});
}

/// Upper-triangular matrices w.r.t. the standard basis; order p(p-1)^2.
inline Subgroup build_borel(PrimeModulus mod) {
    std::uint32_t g = primitive_root(mod).value();
    return generate(mod, {Mat2::diagonal(mod, g, 1), Mat2::diagonal(mod, 1, g), Mat2(mod, 1, 1, 0, 1)});
}

/// First matrix (x y*alpha; y x) of full order p^2-1, scanning x then y.
/// These matrices realize the multiplicative group of a field with p^2
/// elements, so generators exist and the scan is short; x = 0 is skipped
/// because those elements square to scalars and never have full order.
inline Mat2 nonsplit_cartan_generator(PrimeModulus mod, Scalar alpha) {
    if (alpha.modulus() != mod) throw std::invalid_argument("alpha modulus mismatch");
    if (alpha.is_zero() || is_quadratic_residue(alpha))
        throw std::invalid_argument("alpha must be a quadratic non-residue");
    std::uint32_t p = mod.value();
    std::uint64_t full = static_cast<std::uint64_t>(p) * p - 1;
    for (std::uint32_t x = 1; x < p; ++x)
        for (std::uint32_t y = 1; y < p; ++y) {
            Mat2 m(mod, x, detail::mul_mod(y, alpha.value(), p), y, x);
            if (element_order(m) == full) return m;
        }
    throw std::logic_error("no cyclic generator found");  // unreachable
}

/// Multiplicative group of F_p[m] for m = (0 alpha; 1 0) with alpha a
/// non-square: matrices (x y*alpha; y x), cyclic of order p^2-1.
inline Subgroup build_nonsplit_cartan(PrimeModulus mod, Scalar alpha) {
    return generate(mod, {nonsplit_cartan_generator(mod, alpha)});
}

/// Normalizer of C in GL2(F_p) by direct scan over the ambient group.
/// The scan is p^4 candidates, so p is capped.
inline Subgroup normalizer_of(const Subgroup& C) {
    PrimeModulus mod = C.modulus();
    std::uint32_t p = mod.value();
    if (p > 50) throw resource_error("normalizer scan not supported for p > 50");

    std::vector<Mat2> members;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    if (detail::sub_mod(detail::mul_mod(a, d, p), detail::mul_mod(b, c, p), p) == 0)
                        continue;
                    Mat2 g(mod, a, b, c, d);
                    Mat2 gi = g.inverse();
                    bool normalizes = true;
                    for (const Mat2& m : C.generators()) {
                        if (!C.contains(g * m * gi)) { normalizes = false; break; }
                    }
                    if (normalizes) members.push_back(g);
                }

    // Provenance generators: C's own, extended greedily until they span.
    std::vector<Mat2> gens = C.generators();
    std::unordered_set<Mat2> span(C.elements().begin(), C.elements().end());
    for (const Mat2& x : members) {
        if (span.size() == members.size()) break;
        if (span.count(x)) continue;
        gens.push_back(x);
        Subgroup s = generate(mod, gens);
        span = std::unordered_set<Mat2>(s.elements().begin(), s.elements().end());
    }
    return Subgroup(mod, gens, members);
}

enum class ExceptionalType { none, A4, S4, A5 };

/// Per-subgroup flags for the maximal-subgroup taxonomy, plus the scalar
/// subgroup data.  Flags are not mutually exclusive; consumers choose
/// precedence.
struct ClassificationReport {
    std::uint64_t order = 0;
    bool p_divides_order = false;
    bool contains_sl2 = false;
    bool in_borel = false;
    bool in_split_cartan = false;
    bool in_split_normalizer = false;
    bool in_nonsplit_cartan = false;
    bool in_nonsplit_normalizer = false;
    ExceptionalType exceptional = ExceptionalType::none;
    bool irreducible = false;
    std::uint32_t scalar_order = 0;
    std::uint32_t homothety_index = 0;
    std::uint32_t det_image_order = 0;
};

namespace detail {

// x = s*I + y*m for some s, y?  Solvable in O(1) when m is non-scalar:
// y is forced by an off-diagonal entry, s by the upper-left one.
inline bool in_plane_of(const Mat2& x, const Mat2& m) {
    std::uint32_t p = x.p();
    std::uint32_t y;
    if (m.c() != 0)
        y = mul_mod(x.c(), inv_mod(m.c(), p), p);
    else if (m.b() != 0)
        y = mul_mod(x.b(), inv_mod(m.b(), p), p);
    else
        return false;
    std::uint32_t s = sub_mod(x.a(), mul_mod(y, m.a(), p), p);
    return x.b() == mul_mod(y, m.b(), p) &&
           x.c() == mul_mod(y, m.c(), p) &&
           x.d() == add_mod(s, mul_mod(y, m.d(), p), p);
}

// g normalizes the plane F_p[m] (m non-scalar) iff g m g^-1 lands back in it.
inline bool normalizes_plane(const Subgroup& G, const Mat2& m) {
    for (const Mat2& g : G.elements())
        if (!in_plane_of(g * m * g.inverse(), m)) return false;
    return true;
}

inline bool contains_sl2_check(const Subgroup& G) {
    std::uint32_t p = G.p();
    std::uint64_t sl2 = sl2_order(p);
    if (G.order() % sl2 != 0) return false;
    PrimeModulus mod = G.modulus();
    for (std::uint32_t a = 0; a < p; ++a) {
        if (a != 0) {
            std::uint32_t ai = inv_mod(a, p);
            for (std::uint32_t b = 0; b < p; ++b)
                for (std::uint32_t c = 0; c < p; ++c) {
                    std::uint32_t d = mul_mod(add_mod(1, mul_mod(b, c, p), p), ai, p);
                    if (!G.contains(Mat2(mod, a, b, c, d))) return false;
                }
        } else {
            for (std::uint32_t b = 1; b < p; ++b) {
                std::uint32_t c = neg_mod(inv_mod(b, p), p);
                for (std::uint32_t d = 0; d < p; ++d)
                    if (!G.contains(Mat2(mod, 0, b, c, d))) return false;
            }
        }
    }
    return true;
}

// Unordered pair of distinct lines stabilized setwise by every element?
inline bool stabilizes_line_pair(const Subgroup& G) {
    std::uint32_t p = G.p();
    std::uint32_t nl = p + 1;
    std::vector<ProjLine> lines = ProjLine::all(G.modulus());
    std::vector<std::pair<std::uint16_t, std::uint16_t>> survivors;
    for (std::uint16_t i = 0; i < nl; ++i)
        for (std::uint16_t j = i + 1; j < nl; ++j) survivors.emplace_back(i, j);

    std::vector<std::uint16_t> sigma(nl);
    for (const Mat2& m : G.elements()) {
        for (std::uint32_t i = 0; i < nl; ++i) sigma[i] = static_cast<std::uint16_t>(lines[i].apply(m).index());
        std::vector<std::pair<std::uint16_t, std::uint16_t>> next;
        next.reserve(survivors.size());
        for (auto [i, j] : survivors) {
            std::uint16_t si = sigma[i], sj = sigma[j];
            if ((si == i && sj == j) || (si == j && sj == i)) next.emplace_back(i, j);
        }
        survivors.swap(next);
        if (survivors.empty()) return false;
    }
    return true;
}

// Scalars commute with everything, so testing the non-scalar part suffices.
inline bool all_commute(const std::vector<Mat2>& nonscalars) {
    for (std::size_t i = 0; i < nonscalars.size(); ++i)
        for (std::size_t j = i + 1; j < nonscalars.size(); ++j)
            if (nonscalars[i] * nonscalars[j] != nonscalars[j] * nonscalars[i]) return false;
    return true;
}

// Contained in the normalizer of some non-split Cartan subgroup.
//
// Candidates are built constructively: the plane F_p[m] of any non-scalar
// m in G with irreducible characteristic polynomial is a non-split Cartan,
// and G normalizes it iff every conjugate of m stays in the plane.  When G
// has no such element, the only remaining possibility is scalars plus a
// single coset of trace-zero split elements; conjugating the standard
// Cartan (0 alpha; 1 0) into the eigenbasis of one of them decides it.
inline bool in_nonsplit_normalizer_check(const Subgroup& G, const std::vector<Mat2>& nonscalars) {
    std::uint32_t p = G.p();
    PrimeModulus mod = G.modulus();
    if (nonscalars.empty()) return true;  // scalars lie in every Cartan
    std::uint64_t norm_order = 2 * (static_cast<std::uint64_t>(p) * p - 1);
    if (norm_order % G.order() != 0) return false;

    std::vector<Mat2> tried;
    bool any_irreducible = false;
    for (const Mat2& m : nonscalars) {
        if (!has_irreducible_char_poly(m)) continue;
        any_irreducible = true;
        bool fresh = true;
        for (const Mat2& t : tried)
            if (in_plane_of(m, t)) { fresh = false; break; }
        if (!fresh) continue;
        tried.push_back(m);
        if (normalizes_plane(G, m)) return true;
    }
    if (any_irreducible) return false;

    // All non-scalar elements are split.  Inside a non-split normalizer they
    // would have to form one coset of trace-zero elements over the scalars.
    const Mat2& w = nonscalars.front();
    if (w.trace().value() != 0) return false;
    for (const Mat2& x : nonscalars)
        if (!(x * w.inverse()).is_scalar()) return false;

    // Eigenvalues of w are +-mu with mu^2 = -det(w), a square here.
    auto mu = sqrt_mod(-w.det());
    if (!mu) return false;
    std::uint32_t muv = mu->value();
    auto eigenvector = [&](std::uint32_t lam) -> std::pair<std::uint32_t, std::uint32_t> {
        if (w.b() != 0) return {w.b(), sub_mod(lam, w.a(), p)};
        if (w.c() != 0) return {add_mod(lam, w.a(), p), w.c()};
        return w.a() == lam ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u);
    };
    auto [u1, v1] = eigenvector(muv);
    auto [u2, v2] = eigenvector(neg_mod(muv, p));
    Mat2 basis(mod, u1, u2, v1, v2);
    std::uint32_t alpha = smallest_nonresidue(mod).value();
    Mat2 cartan_gen = basis * Mat2(mod, 0, alpha, 1, 0) * basis.inverse();
    return normalizes_plane(G, cartan_gen);
}

}  // namespace detail

/// Canonical representatives of the distinct classes of G in PGL2(F_p).
inline std::vector<Mat2> pgl_image(const Subgroup& G) {
    std::vector<Mat2> reps;
    std::unordered_set<std::uint64_t> seen;
    for (const Mat2& m : G.elements()) {
        Mat2 rep = PglClass(m).representative();
        if (seen.insert(rep.encode()).second) reps.push_back(rep);
    }
    return reps;
}

/// Distinct element orders of the image of G in PGL2(F_p), with class counts.
inline std::map<std::uint64_t, std::uint32_t> pgl_order_histogram(const Subgroup& G) {
    std::map<std::uint64_t, std::uint32_t> histogram;
    for (const Mat2& rep : pgl_image(G)) ++histogram[pgl_order(rep)];
    return histogram;
}

/// Order of the scalar subgroup of G and its index in F_p^x.
struct ScalarSubgroupInfo {
    std::uint32_t order;
    std::uint32_t homothety_index;
};

inline ScalarSubgroupInfo scalar_subgroup(const Subgroup& G) {
    std::uint32_t count = 0;
    for (const Mat2& m : G.elements())
        if (m.is_scalar()) ++count;
    return {count, (G.p() - 1) / count};
}

inline ClassificationReport classify(const Subgroup& G) {
    ClassificationReport r;
    std::uint32_t p = G.p();
    r.order = G.order();
    r.p_divides_order = (r.order % p == 0);

    std::vector<Mat2> nonscalars;
    std::unordered_set<std::uint32_t> dets;
    std::uint32_t scalar_count = 0;
    for (const Mat2& m : G.elements()) {
        if (m.is_scalar())
            ++scalar_count;
        else
            nonscalars.push_back(m);
        dets.insert(m.det().value());
    }
    r.scalar_order = scalar_count;
    if ((p - 1) % scalar_count != 0)
        throw std::logic_error("scalar subgroup order must divide p-1");
    r.homothety_index = (p - 1) / scalar_count;
    r.det_image_order = static_cast<std::uint32_t>(dets.size());

    // Lines fixed by every element decide Borel / split-Cartan containment.
    std::vector<ProjLine> common = ProjLine::all(G.modulus());
    for (const Mat2& m : G.elements()) {
        std::erase_if(common, [&](const ProjLine& line) { return line.apply(m) != line; });
        if (common.empty()) break;
    }
    r.in_borel = !common.empty();
    r.irreducible = common.empty();
    r.in_split_cartan = common.size() >= 2;
    r.in_split_normalizer = detail::stabilizes_line_pair(G);

    bool abelian = detail::all_commute(nonscalars);
    bool has_irred = false;
    if (abelian) {
        for (const Mat2& m : nonscalars)
            if (has_irreducible_char_poly(m)) { has_irred = true; break; }
    }
    r.in_nonsplit_cartan = nonscalars.empty() || (abelian && has_irred);
    r.in_nonsplit_normalizer = detail::in_nonsplit_normalizer_check(G, nonscalars);

    r.contains_sl2 = detail::contains_sl2_check(G);

    std::uint64_t pgl_size = r.order / scalar_count;
    if (pgl_size == 12 || pgl_size == 24 || pgl_size == 60) {
        std::vector<Mat2> reps = pgl_image(G);
        bool pgl_nonabelian = false;
        for (std::size_t i = 0; i < reps.size() && !pgl_nonabelian; ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (PglClass(reps[i] * reps[j]) != PglClass(reps[j] * reps[i])) {
                    pgl_nonabelian = true;
                    break;
                }
        std::map<std::uint64_t, std::uint32_t> histogram;
        for (const Mat2& rep : reps) ++histogram[pgl_order(rep)];
        static const std::map<std::uint64_t, std::uint32_t> kA4 = {{1, 1}, {2, 3}, {3, 8}};
        static const std::map<std::uint64_t, std::uint32_t> kS4 = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
        static const std::map<std::uint64_t, std::uint32_t> kA5 = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
        if (pgl_nonabelian && pgl_size == 12 && histogram == kA4) r.exceptional = ExceptionalType::A4;
        if (pgl_nonabelian && pgl_size == 24 && histogram == kS4) r.exceptional = ExceptionalType::S4;
        if (pgl_nonabelian && pgl_size == 60 && histogram == kA5) r.exceptional = ExceptionalType::A5;
    }
    return r;
}

/// With SL2 contained in G, G must be the full determinant preimage of
/// det(G), i.e. |G| = |SL2| * delta.
inline bool verify_sl2_det_pullback(const Subgroup& G) {
    if (!detail::contains_sl2_check(G))
        throw std::domain_error("subgroup does not contain SL2");
    std::unordered_set<std::uint32_t> dets;
    for (const Mat2& m : G.elements()) dets.insert(m.det().value());
    return G.order() == detail::sl2_order(G.p()) * dets.size();
}

}  // namespace gl2fp
