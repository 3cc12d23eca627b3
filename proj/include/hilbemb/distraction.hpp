#ifndef HILBEMB_DISTRACTION_HPP
#define HILBEMB_DISTRACTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbemb/field.hpp"
#include "hilbemb/ideal.hpp"

namespace hilbemb {

/// Sparse form over the ambient polynomial ring; zero coefficients are never stored.
using Polynomial = std::map<Monomial, mpq_class>;
/// Coefficient of each variable.
using LinearForm = std::vector<mpq_class>;

LinearForm variable_form(std::size_t num_vars, std::size_t var);
/// "x+z", "x - 2*z", "3y": integer or p/q coefficients, each variable at most once.
LinearForm parse_linear_form(std::string_view text, std::span<const std::string> names);
std::string format_linear_form(const LinearForm& f, std::span<const std::string> names);
std::string format_polynomial(const Polynomial& f, std::span<const std::string> names);

/// Weight vectors compared in turn (larger weight is larger), ties broken by
/// grlex with x1^d largest. Always a total order on each degree, compatible
/// with multiplication.
struct TermOrder {
    std::vector<std::vector<long>> weights;

    bool greater(const Monomial& a, const Monomial& b) const;
};

/// A subspace of one degree of the ambient ring, kept in echelon form with
/// respect to a term order: every row has leading coefficient 1 and the
/// leading monomials are distinct.
class PolySpace {
public:
    PolySpace(FieldConfig field, TermOrder order, int degree);

    int degree() const { return degree_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Polynomial>& rows() const { return rows_; }
    const FieldConfig& field() const { return field_; }
    const TermOrder& order() const { return order_; }

    /// Adds f to the span. Returns the leading monomial of the new row, or
    /// nothing when f was already in the span.
    std::optional<Monomial> insert(const Polynomial& f);
    /// Remainder of f after eliminating leading terms; zero iff f is in the span.
    Polynomial reduce(Polynomial f) const;
    bool contains(const Polynomial& f) const { return reduce(f).empty(); }
    /// Leading monomials of the rows: the initial space for the term order.
    std::vector<Monomial> leading_monomials() const;

private:
    FieldConfig field_;
    TermOrder order_;
    int degree_;
    std::vector<Polynomial> rows_;
    std::map<Monomial, std::size_t> pivot_;
};

/// in_>(V) for the space spanned by `forms` (all of degree `degree`).
std::vector<Monomial> initial_space(const TermOrder& order, const std::vector<Polynomial>& forms,
                                    const FieldConfig& field, int degree);
std::vector<Monomial> initial_space(const TermOrder& order, const PolySpace& v);

/// Infinite matrix of linear forms, one row per variable. Entries default to
/// the row variable; columns j >= N repeat column N.
class DistractionMatrix {
public:
    DistractionMatrix(std::size_t num_vars, int stable_column);

    static DistractionMatrix identity(std::size_t num_vars) { return DistractionMatrix(num_vars, 1); }

    std::size_t num_vars() const { return n_; }
    int stable_column() const { return n_col_; }
    /// 1 <= column <= N.
    void set(std::size_t row, int column, LinearForm form);
    /// Any column >= 1.
    LinearForm entry(std::size_t row, int column) const;
    const std::map<std::pair<std::size_t, int>, LinearForm>& overrides() const { return over_; }

    /// Rows with at least one override.
    std::vector<std::size_t> special_rows() const;

    /// Every choice of one entry per row (columns 1..min(N, cap)) spans the
    /// linear forms. Throws PreconditionError naming a bad choice.
    void check_spanning(const FieldConfig& field, int cap) const;

private:
    std::size_t n_;
    int n_col_;
    std::map<std::pair<std::size_t, int>, LinearForm> over_;
};

/// prod_i prod_{j=1}^{a_i} l_{i,j}, expanded over the field.
Polynomial apply_distraction(const DistractionMatrix& l, const Monomial& m, const FieldConfig& field);

/// Degree-d monomials of the ambient ring lying in I + a (a the ring's
/// defining ideal), ascending in grlex.
std::vector<Monomial> ambient_piece(const MonomialIdeal& ideal, int d);

/// D_L(I + a) degree by degree up to the ring's cap. The dimension of each
/// piece is checked against the number of monomials; when L has at most one
/// special row, closure under multiplication by the variables is checked too.
std::vector<PolySpace> distraction_ideal(const DistractionMatrix& l, const MonomialIdeal& ideal,
                                         const FieldConfig& field);

} // namespace hilbemb

#endif
