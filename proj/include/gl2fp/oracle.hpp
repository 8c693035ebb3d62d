#pragma once

// Exhaustive brute-force verification of the taxonomy and scalar-order
// claims over all subgroups of GL2(F_p) for tiny p.
//
// Enumeration works in an index space over the full ambient group: elements
// become uint16 indices, products become table arithmetic, subgroups become
// index sets deduplicated by an order-independent 128-bit fingerprint.
// full_lattice extends conjugacy-class representatives one generator at a
// time to a fixpoint (complete for all subgroups); gen_pairs closes every
// pair of elements (complete for 2-generated subgroups only).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gl2fp/fp.hpp"
#include "gl2fp/irreducible.hpp"
#include "gl2fp/mat2.hpp"
#include "gl2fp/subgroup.hpp"

namespace gl2fp {

enum class EnumerationMode { full_lattice, gen_pairs };

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Fp128 {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(Fp128 a, Fp128 b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct Fp128Hash {
    std::size_t operator()(const Fp128& f) const noexcept {
        return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ull));
    }
};

// Order-independent fingerprint of an element set given by encodings.
struct SetFingerprint {
    std::uint64_t sum = 0, xr = 0;
    std::uint32_t count = 0;
    void add(std::uint64_t enc) {
        sum += mix64(enc);
        xr ^= mix64(enc ^ 0xa5a5a5a5a5a5a5a5ull);
        ++count;
    }
    Fp128 value() const { return {mix64(sum ^ count), mix64(xr + count)}; }
};

/// Index-space model of GL2(F_p) for small p: element table, inverses,
/// determinant data, and the cached determinant-preimage subgroups.
class GroupTable {
public:
    explicit GroupTable(PrimeModulus mod) : mod_(mod), p_(mod.value()) {
        if (p_ > 13) throw resource_error("enumeration supports p <= 13 only");
        build();
    }

    PrimeModulus mod_;
    std::uint32_t p_;
    std::uint32_t n_ = 0;
    std::vector<std::array<std::uint8_t, 4>> el_;
    std::vector<std::uint16_t> enc2idx_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint8_t> detv_;
    std::vector<std::uint8_t> det_order_;  // multiplicative order, indexed by residue
    std::vector<std::uint16_t> mulcache_;
    bool cached_ = false;
    std::uint16_t id_ = 0;
    std::uint16_t uni_upper_ = 0;  // (1 1; 0 1)
    std::uint16_t uni_lower_ = 0;  // (1 0; 1 1)
    std::array<std::uint16_t, 3> ambient_{};  // generate the whole group

    struct DetPreimage {
        std::uint32_t det_order;
        std::vector<std::uint16_t> elements;  // ascending
        Fp128 fp;
    };
    std::vector<DetPreimage> preimages_;

    std::uint32_t enc_entries(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
        return ((a * p_ + b) * p_ + c) * p_ + d;
    }

    std::uint16_t mul(std::uint16_t i, std::uint16_t j) const {
        if (cached_) return mulcache_[static_cast<std::size_t>(i) * n_ + j];
        const auto& x = el_[i];
        const auto& y = el_[j];
        std::uint32_t a = (x[0] * y[0] + x[1] * y[2]) % p_;
        std::uint32_t b = (x[0] * y[1] + x[1] * y[3]) % p_;
        std::uint32_t c = (x[2] * y[0] + x[3] * y[2]) % p_;
        std::uint32_t d = (x[2] * y[1] + x[3] * y[3]) % p_;
        return enc2idx_[enc_entries(a, b, c, d)];
    }

    std::uint16_t conj(std::uint16_t g, std::uint16_t x) const { return mul(mul(g, x), inv_[g]); }

    std::uint64_t enc_of(std::uint16_t i) const {
        const auto& x = el_[i];
        return enc_entries(x[0], x[1], x[2], x[3]);
    }

    Mat2 mat_of(std::uint16_t i) const {
        const auto& x = el_[i];
        return Mat2(mod_, x[0], x[1], x[2], x[3]);
    }

    const DetPreimage& preimage_for(std::uint32_t det_order) const {
        for (const auto& pre : preimages_)
            if (pre.det_order == det_order) return pre;
        throw std::logic_error("no determinant preimage cached for this order");
    }

private:
    void build();
};

struct ClosureScratch {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    void begin(std::uint32_t n) {
        if (stamp.size() != n) {
            stamp.assign(n, 0);
            epoch = 0;
        }
        if (++epoch == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
    }
    bool test_and_set(std::uint16_t i) {
        if (stamp[i] == epoch) return true;
        stamp[i] = epoch;
        return false;
    }
    bool member(std::uint16_t i) const { return stamp[i] == epoch; }
};

// Closure of seed (a subgroup or {id}) together with gens under right
// multiplication.  With shortcut_det_order != 0 the closure aborts as soon
// as both unipotent witnesses are present: the result then must be the full
// determinant preimage of the subgroup of F_p^x of that order (elementary
// coset argument: a closed set containing SL2 is a union of SL2-cosets, one
// per determinant value it reaches), which is cached in the table.  Returns
// true when the shortcut fired; `out` holds the closure otherwise.
inline bool close_subgroup(const GroupTable& T, ClosureScratch& S,
                           const std::vector<std::uint16_t>& seed,
                           const std::vector<std::uint16_t>& gens,
                           std::uint32_t shortcut_det_order,
                           std::vector<std::uint16_t>& out) {
    S.begin(T.n_);
    out.clear();
    bool has_u = false, has_l = false;
    auto push = [&](std::uint16_t v) {
        if (!S.test_and_set(v)) {
            out.push_back(v);
            if (v == T.uni_upper_) has_u = true;
            if (v == T.uni_lower_) has_l = true;
        }
    };
    for (std::uint16_t s : seed) push(s);
    for (std::uint16_t g : gens) push(g);
    if (shortcut_det_order != 0 && has_u && has_l) return true;
    for (std::size_t qi = 0; qi < out.size(); ++qi) {
        std::uint16_t x = out[qi];
        for (std::uint16_t g : gens) {
            std::uint16_t y = T.mul(x, g);
            if (!S.test_and_set(y)) {
                out.push_back(y);
                if (shortcut_det_order != 0) {
                    if (y == T.uni_upper_) has_u = true;
                    else if (y == T.uni_lower_) has_l = true;
                    if (has_u && has_l) return true;
                }
            }
        }
    }
    return false;
}

inline Fp128 fingerprint_indices(const GroupTable& T, const std::vector<std::uint16_t>& idx) {
    SetFingerprint f;
    for (std::uint16_t i : idx) f.add(T.enc_of(i));
    return f.value();
}

inline void GroupTable::build() {
    enc2idx_.assign(static_cast<std::size_t>(p_) * p_ * p_ * p_, 0xFFFF);
    for (std::uint32_t a = 0; a < p_; ++a)
        for (std::uint32_t b = 0; b < p_; ++b)
            for (std::uint32_t c = 0; c < p_; ++c)
                for (std::uint32_t d = 0; d < p_; ++d) {
                    std::uint32_t det = (a * d % p_ + p_ - b * c % p_) % p_;
                    if (det == 0) continue;
                    enc2idx_[enc_entries(a, b, c, d)] = static_cast<std::uint16_t>(el_.size());
                    el_.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                   static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)});
                    detv_.push_back(static_cast<std::uint8_t>(det));
                }
    n_ = static_cast<std::uint32_t>(el_.size());

    inv_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        const auto& x = el_[i];
        std::uint32_t di = inv_mod(detv_[i], p_);
        std::uint32_t a = x[3] * di % p_;
        std::uint32_t b = (p_ - x[1] % p_) % p_ * di % p_;
        std::uint32_t c = (p_ - x[2] % p_) % p_ * di % p_;
        std::uint32_t d = x[0] * di % p_;
        inv_[i] = enc2idx_[enc_entries(a, b, c, d)];
    }

    if (n_ <= 2100) {
        cached_ = true;
        mulcache_.resize(static_cast<std::size_t>(n_) * n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            const auto& x = el_[i];
            for (std::uint32_t j = 0; j < n_; ++j) {
                const auto& y = el_[j];
                std::uint32_t a = (x[0] * y[0] + x[1] * y[2]) % p_;
                std::uint32_t b = (x[0] * y[1] + x[1] * y[3]) % p_;
                std::uint32_t c = (x[2] * y[0] + x[3] * y[2]) % p_;
                std::uint32_t d = (x[2] * y[1] + x[3] * y[3]) % p_;
                mulcache_[static_cast<std::size_t>(i) * n_ + j] = enc2idx_[enc_entries(a, b, c, d)];
            }
        }
    }

    det_order_.assign(p_, 0);
    for (std::uint32_t v = 1; v < p_; ++v)
        det_order_[v] = static_cast<std::uint8_t>(mult_order(Scalar(v, mod_)));

    id_ = enc2idx_[enc_entries(1, 0, 0, 1)];
    uni_upper_ = enc2idx_[enc_entries(1, 1, 0, 1)];
    uni_lower_ = enc2idx_[enc_entries(1, 0, 1, 1)];
    std::uint32_t z = primitive_root(mod_).value();
    ambient_ = {enc2idx_[enc_entries(z, 0, 0, 1)], uni_upper_, enc2idx_[enc_entries(0, 1, 1, 0)]};

    for (std::uint32_t k = 1; k <= p_ - 1; ++k) {
        if ((p_ - 1) % k != 0) continue;
        DetPreimage pre;
        pre.det_order = k;
        for (std::uint32_t i = 0; i < n_; ++i)
            if (k % det_order_[detv_[i]] == 0) pre.elements.push_back(static_cast<std::uint16_t>(i));
        pre.fp = fingerprint_indices(*this, pre.elements);
        preimages_.push_back(std::move(pre));
    }

    // Sanity: the ambient generators span everything, and the two unipotent
    // witnesses close to exactly the determinant-1 slice.
    ClosureScratch scratch;
    std::vector<std::uint16_t> out;
    close_subgroup(*this, scratch, {id_}, {ambient_[0], ambient_[1], ambient_[2]}, 0, out);
    if (out.size() != n_) throw std::logic_error("ambient generators do not span GL2");
    close_subgroup(*this, scratch, {id_}, {uni_upper_, uni_lower_}, 0, out);
    std::vector<std::uint16_t> sl2(out);
    std::sort(sl2.begin(), sl2.end());
    if (sl2 != preimage_for(1).elements)
        throw std::logic_error("unipotent witnesses do not close to the determinant-1 slice");
}

struct ClassBuild {
    std::vector<std::uint16_t> elements;  // sorted
    std::vector<std::uint16_t> redgens;
    std::vector<std::uint16_t> prov;
    std::uint64_t class_size = 0;
};

struct Registry {
    std::unordered_map<Fp128, std::uint32_t, Fp128Hash> class_of;  // one entry per subgroup copy
    std::vector<ClassBuild> classes;
};

inline std::vector<std::uint16_t> greedy_reduce(const GroupTable& T, ClosureScratch& S,
                                                const std::vector<std::uint16_t>& elements) {
    std::vector<std::uint16_t> gens, out;
    std::vector<std::uint16_t> seed = {T.id_};
    while (true) {
        close_subgroup(T, S, seed, gens, 0, out);
        if (out.size() == elements.size()) break;
        std::uint16_t next = 0;
        bool found = false;
        for (std::uint16_t e : elements)
            if (!S.member(e)) { next = e; found = true; break; }
        if (!found) throw std::logic_error("generating-set reduction diverged");
        gens.push_back(next);
    }
    return gens;
}

// Register a newly discovered subgroup class: record the fingerprints of its
// whole conjugation orbit (so later copies are recognized in O(1)) and keep
// one representative with a reduced generating set.
inline std::uint32_t register_class(const GroupTable& T, ClosureScratch& S, Registry& R,
                                    std::vector<std::uint16_t> sorted_elems,
                                    std::vector<std::uint16_t> prov, Fp128 fp0) {
    std::uint32_t id = static_cast<std::uint32_t>(R.classes.size());
    R.class_of.emplace(fp0, id);
    std::uint64_t orbit = 1;
    std::deque<std::vector<std::uint16_t>> queue;
    queue.push_back(sorted_elems);
    std::vector<std::uint16_t> img;
    while (!queue.empty()) {
        std::vector<std::uint16_t> cur = std::move(queue.front());
        queue.pop_front();
        for (std::uint16_t g : T.ambient_) {
            img.clear();
            img.reserve(cur.size());
            for (std::uint16_t x : cur) img.push_back(T.conj(g, x));
            Fp128 f = fingerprint_indices(T, img);
            if (R.class_of.emplace(f, id).second) {
                ++orbit;
                queue.push_back(img);
            }
        }
    }
    ClassBuild cb;
    cb.redgens = greedy_reduce(T, S, sorted_elems);
    cb.elements = std::move(sorted_elems);
    cb.prov = std::move(prov);
    cb.class_size = orbit;
    R.classes.push_back(std::move(cb));
    return id;
}

inline Registry full_lattice_enum(const GroupTable& T) {
    Registry R;
    ClosureScratch S;
    std::vector<std::uint16_t> trivial = {T.id_};
    register_class(T, S, R, trivial, {}, fingerprint_indices(T, trivial));

    std::vector<std::uint8_t> visited;
    std::vector<std::uint16_t> out;
    for (std::uint32_t ci = 0; ci < R.classes.size(); ++ci) {
        const std::vector<std::uint16_t> helems = R.classes[ci].elements;
        std::vector<std::uint16_t> gens = R.classes[ci].redgens;
        const std::vector<std::uint16_t> hprov = R.classes[ci].prov;
        gens.push_back(0);
        visited.assign(T.n_, 0);
        for (std::uint16_t e : helems) visited[e] = 1;
        for (std::uint32_t y = 0; y < T.n_; ++y) {
            if (visited[y]) continue;
            gens.back() = static_cast<std::uint16_t>(y);
            close_subgroup(T, S, helems, gens, 0, out);
            Fp128 fp = fingerprint_indices(T, out);
            if (!R.class_of.count(fp)) {
                std::vector<std::uint16_t> sorted(out);
                std::sort(sorted.begin(), sorted.end());
                std::vector<std::uint16_t> prov(hprov);
                prov.push_back(static_cast<std::uint16_t>(y));
                register_class(T, S, R, std::move(sorted), std::move(prov), fp);
            }
            // Extensions by elements of the same H-double-coset close to the
            // same subgroup, so the whole of H y H can be skipped.
            for (std::uint16_t a : helems) {
                std::uint16_t t = T.mul(a, static_cast<std::uint16_t>(y));
                for (std::uint16_t b : helems) visited[T.mul(t, b)] = 1;
            }
        }
    }
    return R;
}

inline Registry gen_pairs_enum(const GroupTable& T) {
    Registry R;
    ClosureScratch S;

    // Conjugacy-class representatives of elements; pairs (x, y) are covered
    // up to conjugation by extending each representative's cyclic subgroup,
    // and orbit registration restores all conjugate copies.
    std::vector<std::uint8_t> evisited(T.n_, 0);
    std::vector<std::uint16_t> ereps;
    std::deque<std::uint16_t> q;
    for (std::uint32_t i = 0; i < T.n_; ++i) {
        if (evisited[i]) continue;
        ereps.push_back(static_cast<std::uint16_t>(i));
        evisited[i] = 1;
        q.push_back(static_cast<std::uint16_t>(i));
        while (!q.empty()) {
            std::uint16_t x = q.front();
            q.pop_front();
            for (std::uint16_t g : T.ambient_) {
                std::uint16_t y = T.conj(g, x);
                if (!evisited[y]) {
                    evisited[y] = 1;
                    q.push_back(y);
                }
            }
        }
    }

    std::unordered_set<std::uint32_t> extended;  // cyclic-base classes already processed
    std::vector<std::uint8_t> visited;
    std::vector<std::uint16_t> out;
    for (std::uint16_t x : ereps) {
        close_subgroup(T, S, {T.id_}, {x}, 0, out);
        std::vector<std::uint16_t> celems(out);
        Fp128 cfp = fingerprint_indices(T, celems);
        std::uint32_t cid;
        auto it = R.class_of.find(cfp);
        if (it == R.class_of.end()) {
            std::vector<std::uint16_t> sorted(celems);
            std::sort(sorted.begin(), sorted.end());
            cid = register_class(T, S, R, std::move(sorted), {x, x}, cfp);
        } else {
            cid = it->second;
        }
        if (!extended.insert(cid).second) continue;

        std::uint32_t xdet_order = T.det_order_[T.detv_[x]];
        visited.assign(T.n_, 0);
        for (std::uint16_t e : celems) visited[e] = 1;
        for (std::uint32_t y = 0; y < T.n_; ++y) {
            if (visited[y]) continue;
            std::uint16_t yy = static_cast<std::uint16_t>(y);
            std::uint32_t det_order = std::lcm(xdet_order, static_cast<std::uint32_t>(T.det_order_[T.detv_[yy]]));
            bool shortcut = close_subgroup(T, S, celems, {x, yy}, det_order, out);
            Fp128 fp;
            const std::vector<std::uint16_t>* elems;
            if (shortcut) {
                const auto& pre = T.preimage_for(det_order);
                fp = pre.fp;
                elems = &pre.elements;
            } else {
                fp = fingerprint_indices(T, out);
                elems = &out;
            }
            if (!R.class_of.count(fp)) {
                std::vector<std::uint16_t> sorted(*elems);
                std::sort(sorted.begin(), sorted.end());
                register_class(T, S, R, std::move(sorted), {x, yy}, fp);
            }
            for (std::uint16_t a : celems) {
                std::uint16_t t = T.mul(a, yy);
                for (std::uint16_t b : celems) visited[T.mul(t, b)] = 1;
            }
        }
    }
    return R;
}

}  // namespace detail

/// Everything an enumeration run produced: per-class representatives (as
/// element encodings, self-contained) and the fingerprint registry of every
/// subgroup copy seen.
struct EnumerationData {
    PrimeModulus mod;
    EnumerationMode mode;
    std::uint64_t subgroup_count = 0;
    std::uint64_t conjugacy_class_count = 0;

    struct ClassView {
        std::vector<std::uint32_t> element_encs;
        std::vector<std::uint32_t> provenance_encs;
        std::uint64_t class_size = 0;
    };
    std::vector<ClassView> classes;
    std::unordered_set<detail::Fp128, detail::Fp128Hash> fingerprints;
};

namespace detail {

inline Mat2 decode_enc(PrimeModulus mod, std::uint32_t enc) {
    std::uint32_t p = mod.value();
    std::uint32_t d = enc % p;
    std::uint32_t c = enc / p % p;
    std::uint32_t b = enc / (p * p) % p;
    std::uint32_t a = enc / (p * p * p);
    return Mat2(mod, a, b, c, d);
}

}  // namespace detail

inline EnumerationMode default_enumeration_mode(PrimeModulus mod) {
    return mod.value() <= 7 ? EnumerationMode::full_lattice : EnumerationMode::gen_pairs;
}

inline EnumerationData enumerate_detail(PrimeModulus mod, EnumerationMode mode) {
    std::uint32_t p = mod.value();
    if (mode == EnumerationMode::full_lattice && p != 5 && p != 7)
        throw resource_error("full-lattice enumeration is supported for p in {5, 7}");
    if (mode == EnumerationMode::gen_pairs && p != 5 && p != 7 && p != 11 && p != 13)
        throw resource_error("pair enumeration is supported for p in {5, 7, 11, 13}");

    detail::GroupTable table(mod);
    detail::Registry reg = mode == EnumerationMode::full_lattice ? detail::full_lattice_enum(table)
                                                                 : detail::gen_pairs_enum(table);

    EnumerationData data{mod, mode, 0, 0, {}, {}};
    data.conjugacy_class_count = reg.classes.size();
    data.classes.reserve(reg.classes.size());
    for (const auto& cb : reg.classes) {
        EnumerationData::ClassView view;
        view.element_encs.reserve(cb.elements.size());
        for (std::uint16_t i : cb.elements)
            view.element_encs.push_back(static_cast<std::uint32_t>(table.enc_of(i)));
        for (std::uint16_t i : cb.prov)
            view.provenance_encs.push_back(static_cast<std::uint32_t>(table.enc_of(i)));
        view.class_size = cb.class_size;
        data.subgroup_count += cb.class_size;
        data.classes.push_back(std::move(view));
    }
    data.fingerprints.reserve(reg.class_of.size());
    for (const auto& [fp, id] : reg.class_of) {
        (void)id;
        data.fingerprints.insert(fp);
    }
    return data;
}

inline Subgroup materialize(PrimeModulus mod, const EnumerationData::ClassView& view) {
    std::vector<Mat2> elements, gens;
    elements.reserve(view.element_encs.size());
    for (std::uint32_t enc : view.element_encs) elements.push_back(detail::decode_enc(mod, enc));
    for (std::uint32_t enc : view.provenance_encs) gens.push_back(detail::decode_enc(mod, enc));
    return Subgroup(mod, std::move(gens), std::move(elements));
}

/// Fingerprint of a materialized subgroup, comparable with enumeration data.
inline bool enumeration_contains(const EnumerationData& data, const Subgroup& G) {
    detail::SetFingerprint f;
    for (const Mat2& m : G.elements()) f.add(m.encode());
    return data.fingerprints.count(f.value()) != 0;
}

/// One class representative per conjugacy class found.
inline std::vector<Subgroup> enumerate_subgroups(PrimeModulus mod, EnumerationMode mode) {
    EnumerationData data = enumerate_detail(mod, mode);
    std::vector<Subgroup> out;
    out.reserve(data.classes.size());
    for (const auto& view : data.classes) out.push_back(materialize(mod, view));
    return out;
}

struct PropertyFailure {
    std::vector<Mat2> generators;
    std::string property;
};

struct EnumerationResult {
    PrimeModulus p;
    std::uint64_t subgroup_count = 0;
    std::uint64_t conjugacy_class_count = 0;
    std::vector<PropertyFailure> failures;
};

namespace detail {

inline std::vector<Mat2> provenance_of(PrimeModulus mod, const EnumerationData::ClassView& view) {
    std::vector<Mat2> gens;
    for (std::uint32_t enc : view.provenance_encs) gens.push_back(decode_enc(mod, enc));
    if (gens.empty()) gens.push_back(Mat2::identity(mod));
    return gens;
}

// All checked properties are invariant under conjugation, so verifying the
// class representative verifies every copy in its class.
inline void check_classification(const EnumerationData& data, EnumerationResult& result) {
    for (const auto& view : data.classes) {
        Subgroup S = materialize(data.mod, view);
        ClassificationReport r = classify(S);
        bool taxonomy = r.p_divides_order
                            ? (r.contains_sl2 || r.in_borel)
                            : (r.exceptional != ExceptionalType::none || r.in_split_normalizer ||
                               r.in_nonsplit_normalizer);
        if (!taxonomy)
            result.failures.push_back({provenance_of(data.mod, view), "taxonomy_completeness"});
        bool implications = (!r.in_split_cartan || (r.in_split_normalizer && r.in_borel)) &&
                            (!r.in_nonsplit_cartan || r.in_nonsplit_normalizer);
        if (!implications)
            result.failures.push_back({provenance_of(data.mod, view), "flag_implications"});
        if (r.exceptional != ExceptionalType::none) {
            for (const auto& [order, count] : pgl_order_histogram(S)) {
                (void)count;
                if (order > 5) {
                    result.failures.push_back(
                        {provenance_of(data.mod, view), "exceptional_small_pgl_orders"});
                    break;
                }
            }
        }
    }
}

inline void check_homothety_props(const EnumerationData& data, EnumerationResult& result) {
    for (const auto& view : data.classes) {
        Subgroup S = materialize(data.mod, view);
        ClassificationReport r = classify(S);
        std::uint32_t delta = r.det_image_order;
        if (r.contains_sl2 &&
            r.scalar_order % homothety_order_sl2_case(delta, data.mod) != 0)
            result.failures.push_back({provenance_of(data.mod, view), "scalar_order_sl2_case"});
        if (r.in_split_normalizer && !r.in_split_cartan &&
            r.scalar_order % homothety_order_cartan_case(delta) != 0)
            result.failures.push_back(
                {provenance_of(data.mod, view), "scalar_order_split_normalizer_case"});
        if (r.in_nonsplit_normalizer &&
            r.scalar_order % homothety_order_cartan_case(delta) != 0)
            result.failures.push_back(
                {provenance_of(data.mod, view), "scalar_order_nonsplit_normalizer_case"});
    }
}

}  // namespace detail

/// Asserts the taxonomy dichotomy over every enumerated subgroup.
inline EnumerationResult verify_classification(PrimeModulus mod, EnumerationMode mode) {
    EnumerationData data = enumerate_detail(mod, mode);
    EnumerationResult result{mod, data.subgroup_count, data.conjugacy_class_count, {}};
    detail::check_classification(data, result);
    return result;
}

inline EnumerationResult verify_classification(PrimeModulus mod) {
    return verify_classification(mod, default_enumeration_mode(mod));
}

/// Asserts the scalar-order conclusions for every enumerated subgroup that
/// meets the hypotheses of the SL2 and Cartan-normalizer cases.
inline EnumerationResult verify_homothety_props(PrimeModulus mod, EnumerationMode mode) {
    EnumerationData data = enumerate_detail(mod, mode);
    EnumerationResult result{mod, data.subgroup_count, data.conjugacy_class_count, {}};
    detail::check_homothety_props(data, result);
    return result;
}

inline EnumerationResult verify_homothety_props(PrimeModulus mod) {
    return verify_homothety_props(mod, default_enumeration_mode(mod));
}

/// Runs both check families over a single enumeration.
inline EnumerationResult verify_all(PrimeModulus mod, EnumerationMode mode) {
    EnumerationData data = enumerate_detail(mod, mode);
    EnumerationResult result{mod, data.subgroup_count, data.conjugacy_class_count, {}};
    detail::check_classification(data, result);
    detail::check_homothety_props(data, result);
    return result;
}

inline EnumerationResult verify_all(PrimeModulus mod) {
    return verify_all(mod, default_enumeration_mode(mod));
}

}  // namespace gl2fp
