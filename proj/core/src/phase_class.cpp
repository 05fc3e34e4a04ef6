#include "qls/phase_class.hpp"

#include "qls/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace qls {

StateVector canonicalize(const StateVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!v[i].is_zero())
            return v.scaled(v[i].inverse());
    }
    throw DivisionByZero("canonicalize of zero vector");
}

bool same_up_to_phase(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("phase comparison across dimensions");
    for (std::size_t j = 0; j < u.dim(); ++j)
        for (std::size_t k = j + 1; k < u.dim(); ++k)
            if (u[j] * v[k] != u[k] * v[j]) return false;
    // Proportional; rule out the degenerate disjoint-support case u = 0 on
    // v's support and vice versa (cannot happen for unit vectors unless one
    // is zero where the other is not everywhere).
    for (std::size_t j = 0; j < u.dim(); ++j)
        if (u[j].is_zero() != v[j].is_zero()) return false;
    return true;
}

namespace {

struct KeyLess {
    bool operator()(const StateVector& a, const StateVector& b) const {
        return structural_compare(a, b) < 0;
    }
};

std::vector<std::optional<StateVector>> compute_keys(const std::vector<StateVector>& cells,
                                                     int threads) {
    std::vector<std::optional<StateVector>> keys(cells.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            try {
                keys[i] = canonicalize(cells[i]);
            } catch (const TooManyRadicals&) {
                keys[i] = std::nullopt;
            } catch (const RadicandTooLarge&) {
                keys[i] = std::nullopt;
            }
        }
    };
    std::size_t n = cells.size();
    std::size_t t = std::max(1, threads);
    t = std::min(t, n == 0 ? std::size_t(1) : n);
    if (t <= 1) {
        work(0, n);
        return keys;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + t - 1) / t;
    for (std::size_t w = 0; w < t; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
    return keys;
}

} // namespace

Census Census::of(const std::vector<StateVector>& cells, int threads) {
    auto keys = compute_keys(cells, threads);

    Census out;
    std::map<StateVector, std::size_t, KeyLess> by_key;
    std::vector<std::size_t> keyless; // class indices without canonical form

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (keys[i]) {
            auto [it, inserted] = by_key.emplace(*keys[i], out.classes_.size());
            if (inserted) {
                out.classes_.push_back({cells[i], keys[i], 1});
            } else {
                out.classes_[it->second].multiplicity++;
            }
        } else {
            // Fall back to the division-free test against every existing class.
            bool matched = false;
            for (auto& cls : out.classes_) {
                if (same_up_to_phase(cls.representative, cells[i])) {
                    cls.multiplicity++;
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                keyless.push_back(out.classes_.size());
                out.classes_.push_back({cells[i], std::nullopt, 1});
            }
        }
    }
    return out;
}

SetRelations set_relations(const Census& a, const Census& b) {
    std::map<StateVector, bool, KeyLess> b_keys; // canonical -> matched
    for (const auto& cls : b.classes())
        if (cls.canonical) b_keys.emplace(*cls.canonical, false);

    std::size_t common = 0;
    for (const auto& ca : a.classes()) {
        bool found = false;
        if (ca.canonical) {
            auto it = b_keys.find(*ca.canonical);
            if (it != b_keys.end()) found = true;
        }
        if (!found) {
            // Keyless on either side: fall back to pairwise comparison.
            for (const auto& cb : b.classes()) {
                if ((ca.canonical && cb.canonical) || ca.representative.dim() != cb.representative.dim())
                    continue;
                if (same_up_to_phase(ca.representative, cb.representative)) {
                    found = true;
                    break;
                }
            }
        }
        if (found) ++common;
    }
    return {common, a.cardinality() - common, b.cardinality() - common};
}

} // namespace qls
