#pragma once

#include "mclab/liealg.hpp"

#include <string>
#include <vector>

namespace mclab {

enum class ChartKind { first_kind, second_kind, three_factor, matrix_inverse, matrix_direct, sp2_paper };

std::string chart_kind_name(ChartKind k);
ChartKind parse_chart_kind(const std::string& name);

enum class Path { abstract, matrix };

// Coordinates x_gamma on N indexed by positive root id. The chart frame generator attached to
// x_gamma is G_gamma = scale(gamma) * E_gamma.
//   first_kind      n = exp(sum x_g E_g)
//   second_kind     n = prod_g exp(x_g E_g), contract order
//   three_factor    n = exp(z E_w) exp(sum y_a E_a) exp(sum x_b E_b), a in Sigma_1/2, b in Sigma_0
//   sp2_paper       n = exp(x X + y Y + z Z) exp(u U) for sp(2)
//   matrix_inverse  n = M^{-1}, M unipotent upper triangular with entries x (sl(n) only)
//   matrix_direct   n = M
class Chart {
public:
    Chart(const SplitLieAlgebra& alg, ChartKind kind);

    const SplitLieAlgebra& algebra() const { return *alg_; }
    const RootSystem& root_system() const { return alg_->root_system(); }
    ChartKind kind() const { return kind_; }
    std::string name() const { return chart_kind_name(kind_); }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Q>& scales() const { return scales_; }
    const std::vector<int>& weights() const { return weights_; }
    bool is_matrix_chart() const { return kind_ == ChartKind::matrix_inverse || kind_ == ChartKind::matrix_direct; }
    // Matrix position (row, col) of coordinate gamma in a matrix chart.
    std::pair<std::size_t, std::size_t> position(std::size_t gamma) const { return pos_.at(gamma); }
    const std::vector<std::vector<std::size_t>>& factors() const { return factors_; }

    // Coefficients of log n along E_gamma as polynomials in the coordinates.
    const std::vector<Poly>& to_log() const { return to_log_; }
    // Inverse map: coordinates as polynomials in the log coefficients.
    const std::vector<Poly>& from_log() const { return from_log_; }
    PElem log_element() const;

    // to_log computed by the other route (matrix log for product charts, BCH-free for matrix charts).
    std::vector<Poly> to_log_matrix_path() const;
    // The matrix n(x) in the realization.
    PMatrix point_matrix() const;
    // Coordinates of a unipotent polynomial matrix (entries for matrix charts, log route otherwise).
    std::vector<Poly> coordinates_of(const PMatrix& n) const;

    Poly var(std::size_t gamma) const { return Poly::var(nvars(), gamma); }

private:
    void build_product(const std::vector<std::vector<std::size_t>>& factors);
    void build_matrix();
    void build_from_log();

    const SplitLieAlgebra* alg_;
    ChartKind kind_;
    std::vector<std::string> names_;
    std::vector<Q> scales_;
    std::vector<int> weights_;
    std::vector<std::vector<std::size_t>> factors_;
    std::vector<std::pair<std::size_t, std::size_t>> pos_;
    std::vector<Poly> to_log_, from_log_;
};

ChartKind default_chart_kind(const SplitLieAlgebra& alg);

// Coefficients b_k of z / (1 - e^{-z}) = sum b_k z^k, k = 0..count-1.
std::vector<Q> bch_coefficients(std::size_t count);
// log(e^A e^B) for elements of n with polynomial coefficients in nvars variables.
PElem bch(const SplitLieAlgebra& alg, const PElem& a, const PElem& b, std::size_t nvars);
// e^{-ad L} E.
PElem exp_neg_ad(const SplitLieAlgebra& alg, const PElem& l, const PElem& e);

// Group law as 2N polynomials in (a_0..a_{N-1}, b_0..b_{N-1}).
std::vector<Poly> group_law(const Chart& chart, Path path);
std::vector<Q> group_multiply(const Chart& chart, const std::vector<Q>& a, const std::vector<Q>& b,
                              Path path = Path::abstract);

struct PolyVectorField {
    enum class Frame { coordinate, left_invariant };
    Frame frame = Frame::coordinate;
    bool slice = false;
    std::vector<Poly> comp;  // indexed by positive root id
};

// Coordinate action V(f) = sum V_i d_i f.
Poly apply(const PolyVectorField& v, const Poly& f);
PolyVectorField coordinate_bracket(const PolyVectorField& v, const PolyVectorField& w);

// Left-invariant frame X_gamma (coordinate components), one per positive root.
std::vector<PolyVectorField> left_invariant_frame(const Chart& chart);
// Frame components -> coordinate components and back (triangular).
PolyVectorField frame_to_coordinates(const std::vector<PolyVectorField>& frame, const PolyVectorField& v);
PolyVectorField coordinates_to_frame(const std::vector<PolyVectorField>& frame, const PolyVectorField& v);

// Ad(n^{-1}) E with polynomial coefficients in the chart coordinates.
PElem adjoint_of_point(const Chart& chart, const QElem& e, Path path = Path::abstract);

// tau(E) in the chart's left-invariant frame: component gamma is -(Ad(n^{-1})E)_gamma / scale(gamma).
PolyVectorField tau(const Chart& chart, const QElem& e, Path path = Path::abstract);

// Transport a function on N from chart a to chart b: p_b = p_a o (coords_a in terms of coords_b).
Poly transport(const Poly& p, const Chart& from, const Chart& to);

}  // namespace mclab
