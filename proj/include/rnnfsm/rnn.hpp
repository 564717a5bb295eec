#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rnnfsm/language.hpp"

namespace rnnfsm {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Activation must be total on the rationals and rational-valued on rational
// inputs; relu and saturated_linear ship with the library.
class Activation {
public:
    static Activation relu();
    static Activation saturated_linear();
    static Activation custom(std::string name, std::function<Rational(const Rational&)> fn);
    static std::optional<Activation> by_name(const std::string& name);

    const std::string& name() const { return name_; }
    Rational operator()(const Rational& x) const { return fn_(x); }

private:
    Activation(std::string name, std::function<Rational(const Rational&)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    std::function<Rational(const Rational&)> fn_;
};

// First-order weighted RNN language model:
//   h^(t+1) = act(W h^(t) + emb[input_t]),   logits = O h^(t+1) + O_bias,
//   per-step distribution = softmax base 2 of the logits.
// Rows of embeddings and output are indexed in Sigma_$ order, with the end
// marker row last. Immutable after construction.
class RnnLm {
public:
    RnnLm(Alphabet alphabet, Vector h0, Matrix w, Matrix embeddings, Matrix output,
          Vector output_bias, Activation activation);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t hidden_dim() const { return h0_.size(); }
    const Vector& h0() const { return h0_; }
    const Matrix& w() const { return w_; }
    const Matrix& embeddings() const { return embeddings_; }
    const Matrix& output() const { return output_; }
    const Vector& output_bias() const { return output_bias_; }
    const Activation& activation() const { return activation_; }

    // One recurrence application; input indexed over Sigma_$.
    Vector apply_recurrence(const Vector& hidden, SymbolIndex input) const;
    Vector logits_at(const Vector& hidden) const;

private:
    Alphabet alphabet_;
    Vector h0_;
    Matrix w_;
    Matrix embeddings_;
    Matrix output_;
    Vector output_bias_;
    Activation activation_;
    // Zero-skipping views; compiled machines have very sparse weights.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> w_sparse_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> output_sparse_;
};

// Exact softmax base 2: entry i is 2^{x_i} / sum_j 2^{x_j}. Only defined
// (rationally) when every logit is an integer; nullopt otherwise.
std::optional<Vector> softmax2_exact(const Vector& logits);

// Certified enclosures for arbitrary rational logits.
std::vector<Interval> softmax2_enclosure(const Vector& logits, unsigned precision_bits);

struct StepOutput {
    Vector hidden;
    Vector logits;
    // Exact distribution when every logit is integral, else enclosures.
    std::variant<Vector, std::vector<Interval>> distribution;
};

StepOutput rnn_step(const RnnLm& rnn, const Vector& hidden, SymbolIndex input,
                    unsigned enclosure_bits = 64);

// Weight of a word: the first step consumes $, each following step consumes
// the previous word symbol, and step t is scored against w_t (the final step
// against $). Throws ExactnessUnavailable when any step has a non-integer
// logit.
Rational rnn_weight(const RnnLm& rnn, const Word& word);

Interval rnn_weight_enclosure(const RnnLm& rnn, const Word& word, unsigned precision_bits);

// Exact sum of rnn_weight over all words of length <= max_len.
Rational rnn_mass_upto(const RnnLm& rnn, unsigned max_len);

class RnnLanguage : public WeightedLanguage {
public:
    RnnLanguage(RnnLm rnn, bool declared_consistent);
    RnnLanguage(std::shared_ptr<const RnnLm> rnn, bool declared_consistent);

    const Alphabet& alphabet() const override;
    bool declared_consistent() const override { return declared_consistent_; }
    Rational weight(const Word& word) const override;
    Interval weight_enclosure(const Word& word, unsigned precision_bits) const override;
    std::unique_ptr<PrefixCursor> cursor() const override;

    const RnnLm& rnn() const { return *rnn_; }

private:
    std::shared_ptr<const RnnLm> rnn_;
    bool declared_consistent_;
};

}  // namespace rnnfsm
