#pragma once

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

namespace hk {

// A Hochschild cochain A^{⊗p} → M, evaluated on words of basis keys. A cochain
// may carry components in several arities; the arity is the word length.
// Internal degrees are recovered per term as deg(output) − Σ deg(inputs).
class Cochain {
public:
    using Fn = std::function<Vec(const Word&)>;
    Cochain() : fn_([](const Word&) { return Vec(); }) {}
    explicit Cochain(Fn fn) : fn_(std::move(fn)) {}
    Vec operator()(const Word& w) const { return fn_(w); }
    // Evaluation on a tensor of vectors, extended multilinearly.
    Vec eval(const std::vector<Vec>& args) const;

private:
    Fn fn_;
};

int word_degree(const Algebra& a, const Word& w, std::size_t from = 0, std::size_t to = std::string::npos);
// Internal degree of the value key m on input word w.
int internal_degree(const Bimodule& m, const Key& out, const Algebra& a, const Word& w);

// d_H on Hoch(A, M).
Cochain hoch_dh(const Algebra& a, const Bimodule& m, const Cochain& f);
// ∂ induced from d_A and d_M.
Cochain hoch_partial(const Algebra& a, const Bimodule& m, const Cochain& f);
Cochain hoch_total(const Algebra& a, const Bimodule& m, const Cochain& f);

// Cup product on Hoch(A) = Hoch(A, A).
Cochain cup(const Algebra& a, const Cochain& f, const Cochain& g);
// f ∘_i g for g with values in A; restricted to components of f of arity p1 ≥ i.
Cochain circ(const Algebra& a, const Bimodule& m, const Cochain& f, const Cochain& g, int i);
// Gerstenhaber bracket on Hoch(A).
Cochain bracket(const Algebra& a, const Cochain& f, const Cochain& g);

Cochain operator+(const Cochain& f, const Cochain& g);
Cochain operator-(const Cochain& f, const Cochain& g);
Cochain scale(const Cochain& f, const Q& c);
// Restriction of f to the given arity.
Cochain arity_part(const Cochain& f, int p);

// Distinguished cochains of Hoch(A).
Cochain unit_cochain(const Algebra& a);
Cochain identity_cochain();
Cochain multiplication_cochain(const Algebra& a);
Cochain differential_cochain(const Algebra& a);

// Basis keys of M grouped by degree, used to draw random values.
struct ValueWindow {
    std::map<int, std::vector<Key>> by_degree;
    static ValueWindow of(const Bimodule& m, int bound);
    static ValueWindow of(const Algebra& a, int bound);
};

// Deterministic random cochain of internal degree r with the given arities.
// Values are sparse combinations of window keys in the required degree.
Cochain random_cochain(const Algebra& a, const ValueWindow& values, const std::vector<int>& arities, int r,
                       std::uint64_t seed);

// All words over the given keys of length exactly p.
std::vector<Word> words_of_length(const std::vector<Key>& keys, int p);
// A seeded sample of words of length p (all words when there are at most count).
std::vector<Word> sample_words(const std::vector<Key>& keys, int p, int count, std::uint64_t seed);

// Returns the first word where f and g differ, if any.
std::optional<Word> first_difference(const Cochain& f, const Cochain& g, const std::vector<Word>& words);

struct HochschildTable {
    int window = 0;
    std::map<int, int> dimension;  // total degree → interior dimension
    std::map<int, std::vector<Vec>> representatives;
};

// Interior-window Hochschild cohomology of a finite-dimensional A with
// coefficients in itself. Cochains of arity ≤ P−1 are considered, so each
// reported cocycle has its full differential checked.
HochschildTable hoch_cohomology(const Algebra& a, int max_arity, const std::vector<int>& degrees);

// Cochain keys encode (p, word, value) as [p, |k1|, k1..., |kp|, kp..., |v|, v...].
Key encode_cochain_key(const Word& w, const Key& out);
std::pair<Word, Key> decode_cochain_key(const Key& k);
Cochain cochain_from_vector(const Vec& v);

}  // namespace hk
