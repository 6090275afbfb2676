#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk {

using Q = mpq_class;
using Key = std::vector<int>;
using Word = std::vector<Key>;

class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int sign_of(long e) { return (e % 2 == 0) ? 1 : -1; }

template <class K>
class SparseVec {
public:
    using Map = std::map<K, Q>;
    using const_iterator = typename Map::const_iterator;

    SparseVec() = default;
    SparseVec(const K& k, const Q& c = 1) { add(k, c); }

    void add(const K& k, const Q& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const SparseVec& o, const Q& c = 1) {
        if (sgn(c) == 0) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }
    SparseVec& operator+=(const SparseVec& o) {
        add(o, 1);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        add(o, -1);
        return *this;
    }
    SparseVec operator+(const SparseVec& o) const {
        SparseVec r = *this;
        r += o;
        return r;
    }
    SparseVec operator-(const SparseVec& o) const {
        SparseVec r = *this;
        r -= o;
        return r;
    }
    SparseVec operator-() const { return scaled(-1); }
    SparseVec scaled(const Q& c) const {
        SparseVec r;
        if (sgn(c) == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }
    Q coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Q(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }
    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparseVec& o) const { return !(*this == o); }

private:
    Map terms_;
};

using Vec = SparseVec<Key>;
using TVec = SparseVec<Word>;

// Applies a key-level linear map to a vector.
template <class K, class F>
auto apply_linear(const SparseVec<K>& v, F&& f) {
    decltype(f(std::declval<const K&>())) out;
    for (const auto& [k, c] : v) out.add(f(k), c);
    return out;
}

// Sorts letters in place; swapping two odd letters flips the sign. Returns 0
// when strict ordering is required and two odd letters coincide.
int koszul_sort(std::vector<int>& letters, const std::function<bool(int)>& odd, bool descending = false);

int permutation_sign(const std::vector<int>& perm);

// Koszul sign of reordering objects with the given degrees by perm, where the
// result lists the objects perm[0], perm[1], ...
int koszul_permutation_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

std::vector<std::vector<int>> all_permutations(int n);

// Subsets of {0..n-1} of size k, each increasing.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

std::string key_string(const Key& k);
std::string word_string(const Word& w);
std::string q_string(const Q& q);
Q parse_rational(const std::string& s);
Q factorial(int n);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);
std::uint64_t hash_word(std::uint64_t seed, const Word& w);
std::uint64_t hash_key(std::uint64_t seed, const Key& k);

// Deterministic generator of small integer coefficients in [-3, 3].
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    int coeff() { return static_cast<int>(gen_() % 7) - 3; }
    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }
    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace hk
