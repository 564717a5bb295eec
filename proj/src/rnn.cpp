#include "rnnfsm/rnn.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnnfsm {

Activation Activation::relu() {
    return Activation("relu", [](const Rational& x) { return x > 0 ? x : Rational(0); });
}

Activation Activation::saturated_linear() {
    return Activation("saturated_linear", [](const Rational& x) {
        if (x <= 0) {
            return Rational(0);
        }
        return x >= 1 ? Rational(1) : x;
    });
}

Activation Activation::custom(std::string name, std::function<Rational(const Rational&)> fn) {
    return Activation(std::move(name), std::move(fn));
}

std::optional<Activation> Activation::by_name(const std::string& name) {
    if (name == "relu") {
        return relu();
    }
    if (name == "saturated_linear") {
        return saturated_linear();
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<std::pair<std::size_t, Rational>>> sparsify(const Matrix& matrix) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            if (matrix[i][j] != 0) {
                rows[i].emplace_back(j, matrix[i][j]);
            }
        }
    }
    return rows;
}

}  // namespace

RnnLm::RnnLm(Alphabet alphabet, Vector h0, Matrix w, Matrix embeddings, Matrix output,
             Vector output_bias, Activation activation)
    : alphabet_(std::move(alphabet)),
      h0_(std::move(h0)),
      w_(std::move(w)),
      embeddings_(std::move(embeddings)),
      output_(std::move(output)),
      output_bias_(std::move(output_bias)),
      activation_(std::move(activation)) {
    const std::size_t n = h0_.size();
    const std::size_t rows = alphabet_.sigma_dollar_size();
    if (n == 0) {
        throw std::invalid_argument("hidden dimension must be positive");
    }
    if (w_.size() != n) {
        throw std::invalid_argument("W must be N x N");
    }
    for (const auto& row : w_) {
        if (row.size() != n) {
            throw std::invalid_argument("W must be N x N");
        }
    }
    if (embeddings_.size() != rows) {
        throw std::invalid_argument("one embedding per Sigma_$ symbol required");
    }
    for (const auto& row : embeddings_) {
        if (row.size() != n) {
            throw std::invalid_argument("embedding length must equal N");
        }
    }
    if (output_.size() != rows) {
        throw std::invalid_argument("output matrix must have |Sigma_$| rows");
    }
    for (const auto& row : output_) {
        if (row.size() != n) {
            throw std::invalid_argument("output row length must equal N");
        }
    }
    if (output_bias_.size() != rows) {
        throw std::invalid_argument("output bias must have |Sigma_$| entries");
    }
    w_sparse_ = sparsify(w_);
    output_sparse_ = sparsify(output_);
}

Vector RnnLm::apply_recurrence(const Vector& hidden, SymbolIndex input) const {
    if (hidden.size() != hidden_dim()) {
        throw std::invalid_argument("hidden vector length mismatch");
    }
    if (input >= alphabet_.sigma_dollar_size()) {
        throw std::invalid_argument("input symbol outside Sigma_$");
    }
    Vector next(hidden_dim());
    for (std::size_t i = 0; i < hidden_dim(); ++i) {
        Rational acc = embeddings_[input][i];
        for (const auto& [j, weight] : w_sparse_[i]) {
            acc += weight * hidden[j];
        }
        next[i] = activation_(acc);
    }
    return next;
}

Vector RnnLm::logits_at(const Vector& hidden) const {
    Vector logits(output_.size());
    for (std::size_t row = 0; row < output_.size(); ++row) {
        Rational acc = output_bias_[row];
        for (const auto& [j, weight] : output_sparse_[row]) {
            acc += weight * hidden[j];
        }
        logits[row] = std::move(acc);
    }
    return logits;
}

std::optional<Vector> softmax2_exact(const Vector& logits) {
    if (logits.empty()) {
        throw std::invalid_argument("softmax of empty vector");
    }
    for (const auto& x : logits) {
        if (!is_integer(x)) {
            return std::nullopt;
        }
    }
    // Shift exponents by the minimum so every power of two is integral.
    const Rational& min_logit = *std::min_element(logits.begin(), logits.end());
    Rational denominator = 0;
    std::vector<Rational> numerators;
    numerators.reserve(logits.size());
    for (const auto& x : logits) {
        const Rational shifted = x - min_logit;
        if (!shifted.get_num().fits_slong_p()) {
            throw std::overflow_error("softmax2 logit spread too large");
        }
        Rational power = pow2(shifted.get_num().get_si());
        denominator += power;
        numerators.push_back(std::move(power));
    }
    Vector distribution;
    distribution.reserve(logits.size());
    for (auto& numerator : numerators) {
        distribution.push_back(numerator / denominator);
    }
    return distribution;
}

std::vector<Interval> softmax2_enclosure(const Vector& logits, unsigned precision_bits) {
    if (logits.empty()) {
        throw std::invalid_argument("softmax of empty vector");
    }
    const Rational& min_logit = *std::min_element(logits.begin(), logits.end());
    std::vector<Interval> powers;
    powers.reserve(logits.size());
    Interval denominator = Interval::point(Rational(0));
    for (const auto& x : logits) {
        Interval power = pow2_enclosure(x - min_logit, precision_bits);
        denominator = denominator + power;
        powers.push_back(std::move(power));
    }
    std::vector<Interval> distribution;
    distribution.reserve(logits.size());
    for (const auto& power : powers) {
        distribution.push_back(power / denominator);
    }
    return distribution;
}

StepOutput rnn_step(const RnnLm& rnn, const Vector& hidden, SymbolIndex input,
                    unsigned enclosure_bits) {
    StepOutput out;
    out.hidden = rnn.apply_recurrence(hidden, input);
    out.logits = rnn.logits_at(out.hidden);
    if (auto exact = softmax2_exact(out.logits)) {
        out.distribution = std::move(*exact);
    } else {
        out.distribution = softmax2_enclosure(out.logits, enclosure_bits);
    }
    return out;
}

namespace {

// Shared evaluation loop; Value is Rational (exact) or Interval.
template <typename Value, typename ScoreFn>
Value evaluate_word(const RnnLm& rnn, const Word& word, Value one, const ScoreFn& score) {
    check_word(rnn.alphabet(), word);
    const SymbolIndex dollar = rnn.alphabet().end_marker_index();
    Vector hidden = rnn.h0();
    Value product = std::move(one);
    for (std::size_t t = 0; t <= word.size(); ++t) {
        const SymbolIndex input = t == 0 ? dollar : word[t - 1];
        const SymbolIndex target = t == word.size() ? dollar : word[t];
        hidden = rnn.apply_recurrence(hidden, input);
        product = product * score(rnn.logits_at(hidden), target);
    }
    return product;
}

Rational exact_score(const Vector& logits, SymbolIndex target) {
    const auto distribution = softmax2_exact(logits);
    if (!distribution) {
        throw ExactnessUnavailable("non-integer logits; exact softmax2 undefined");
    }
    return (*distribution)[target];
}

}  // namespace

Rational rnn_weight(const RnnLm& rnn, const Word& word) {
    return evaluate_word<Rational>(rnn, word, Rational(1), exact_score);
}

Interval rnn_weight_enclosure(const RnnLm& rnn, const Word& word, unsigned precision_bits) {
    return evaluate_word<Interval>(
        rnn, word, Interval::point(Rational(1)),
        [precision_bits](const Vector& logits, SymbolIndex target) {
            if (const auto exact = softmax2_exact(logits)) {
                return Interval::point((*exact)[target]);
            }
            return softmax2_enclosure(logits, precision_bits)[target];
        });
}

namespace {

// Stack of (hidden state, partial product) pairs; the node for prefix u has
// already consumed $ then u and scored every symbol of u.
class RnnCursor : public PrefixCursor {
public:
    explicit RnnCursor(const RnnLm& rnn) : rnn_(rnn) {
        hidden_.push_back(rnn_.apply_recurrence(rnn_.h0(), rnn_.alphabet().end_marker_index()));
        product_.push_back(Rational(1));
    }

    void push(SymbolIndex symbol) override {
        const Vector& hidden = hidden_.back();
        product_.push_back(product_.back() * exact_score(rnn_.logits_at(hidden), symbol));
        hidden_.push_back(rnn_.apply_recurrence(hidden, symbol));
    }

    void pop() override {
        hidden_.pop_back();
        product_.pop_back();
    }

    Rational weight() const override {
        const SymbolIndex dollar = rnn_.alphabet().end_marker_index();
        return product_.back() * exact_score(rnn_.logits_at(hidden_.back()), dollar);
    }

private:
    const RnnLm& rnn_;
    std::vector<Vector> hidden_;
    std::vector<Rational> product_;
};

}  // namespace

Rational rnn_mass_upto(const RnnLm& rnn, unsigned max_len) {
    RnnLanguage language(std::make_shared<const RnnLm>(rnn), false);
    return cumulative_mass(language, max_len);
}

RnnLanguage::RnnLanguage(RnnLm rnn, bool declared_consistent)
    : rnn_(std::make_shared<const RnnLm>(std::move(rnn))),
      declared_consistent_(declared_consistent) {}

RnnLanguage::RnnLanguage(std::shared_ptr<const RnnLm> rnn, bool declared_consistent)
    : rnn_(std::move(rnn)), declared_consistent_(declared_consistent) {}

const Alphabet& RnnLanguage::alphabet() const {
    return rnn_->alphabet();
}

Rational RnnLanguage::weight(const Word& word) const {
    return rnn_weight(*rnn_, word);
}

Interval RnnLanguage::weight_enclosure(const Word& word, unsigned precision_bits) const {
    return rnn_weight_enclosure(*rnn_, word, precision_bits);
}

std::unique_ptr<PrefixCursor> RnnLanguage::cursor() const {
    return std::make_unique<RnnCursor>(*rnn_);
}

}  // namespace rnnfsm
