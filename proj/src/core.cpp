#include "hochkit/core.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hk {

int koszul_sort(std::vector<int>& letters, const std::function<bool(int)>& odd, bool descending) {
    int sign = 1;
    auto before = [descending](int a, int b) { return descending ? a > b : a < b; };
    for (std::size_t i = 1; i < letters.size(); ++i) {
        for (std::size_t j = i; j > 0 && before(letters[j], letters[j - 1]); --j) {
            if (odd(letters[j]) && odd(letters[j - 1])) sign = -sign;
            std::swap(letters[j], letters[j - 1]);
        }
    }
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1] && odd(letters[i])) return 0;
    return sign;
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

int koszul_permutation_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    long e = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) e += static_cast<long>(degrees[perm[i]]) * degrees[perm[j]];
    return sign_of(e);
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string key_string(const Key& k) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ']';
    return os.str();
}

std::string word_string(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + key_string(w[i]);
    return s + ")";
}

std::string q_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

Q factorial(int n) {
    Q r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::size_t h = 0;
    boost::hash_combine(h, seed);
    boost::hash_combine(h, tag);
    return h;
}

std::uint64_t hash_key(std::uint64_t seed, const Key& k) {
    std::size_t h = seed;
    boost::hash_combine(h, k.size());
    boost::hash_range(h, k.begin(), k.end());
    return h;
}

std::uint64_t hash_word(std::uint64_t seed, const Word& w) {
    std::size_t h = seed;
    boost::hash_combine(h, w.size());
    for (const auto& k : w) boost::hash_combine(h, hash_key(0x9e37, k));
    return h;
}

}  // namespace hk
