#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilslice/rational.hpp"

namespace nilslice {

/// Variable names plus the integer weight attached to each variable (the
/// eigenvalue of the grading element on the dual basis vector).  A variable
/// of weight n has secondary ("graded") degree n + 2.
struct VarTable {
    std::vector<std::string> names;
    std::vector<int> weights;

    int size() const { return static_cast<int>(names.size()); }

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names,
                                                std::vector<int> weights);
    /// x1..xn with all weights zero.
    static std::shared_ptr<const VarTable> plain(int n);
};

using Expo = std::vector<int>;

enum class Grading { Standard, Slodowy };

/// Graded-lex order: first by total degree, then lexicographically.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

/// Sparse multivariate polynomial over exact rationals.  No zero
/// coefficients are ever stored; term order is graded-lex, which makes the
/// printed form canonical.
class MultiPoly {
public:
    using TermMap = std::map<Expo, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::shared_ptr<const VarTable> vt) : vt_(std::move(vt)) {}

    static MultiPoly constant(std::shared_ptr<const VarTable> vt, const Rat& c);
    static MultiPoly variable(std::shared_ptr<const VarTable> vt, int index);

    const std::shared_ptr<const VarTable>& table() const { return vt_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Expo& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Product with all terms of standard degree > cap discarded (cap < 0
    /// means no truncation).  Feeding cap-truncated operands keeps every
    /// term of degree <= cap exact.
    MultiPoly mul_truncated(const MultiPoly& o, int cap) const;
    /// In-place fused p += q*r with truncation; the workhorse of the
    /// determinant expansions.
    void add_mul_truncated(const MultiPoly& q, const MultiPoly& r, int cap);

    MultiPoly pow(int k, int cap = -1) const;

    MultiPoly truncated(int cap) const;  // drop standard degree > cap

    int degree() const;      // max standard degree, -1 for zero
    int min_degree() const;  // min standard degree, -1 for zero
    int degree_of(const Expo& e, Grading g) const;

    MultiPoly initial_component(Grading g) const;  // throws on zero input
    bool is_homogeneous(Grading g) const;
    /// Graded degree if homogeneous in that grading, nullopt otherwise.
    std::optional<int> homogeneous_degree(Grading g) const;

    MultiPoly derivative(int var) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    /// Substitute polynomials for the variables (with optional truncation).
    MultiPoly compose(const std::vector<MultiPoly>& args,
                      std::shared_ptr<const VarTable> targetTable,
                      int cap = -1) const;

    std::string to_string() const;
    static MultiPoly parse(std::shared_ptr<const VarTable> vt, const std::string& text);

private:
    void check_table(const MultiPoly& o) const;
    std::shared_ptr<const VarTable> vt_;
    TermMap terms_;
};

}  // namespace nilslice
