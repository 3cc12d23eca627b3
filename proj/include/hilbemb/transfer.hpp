#ifndef HILBEMB_TRANSFER_HPP
#define HILBEMB_TRANSFER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbemb/distraction.hpp"
#include "hilbemb/order.hpp"
#include "hilbemb/stabilize.hpp"

namespace hilbemb {

struct PolarizationEmbedding {
    Polarization polarization;
    GradedOrder order;  ///< on polarization.ring
};

/// Embedding order on B/p(a) from one on A/a: extend to B/aB, distract with
/// y-row column d equal to y + z, and read off leading monomials one prefix
/// element at a time. Checks in(D_L(aB)) = p(a) and that z -> y + z sends
/// p(a) back to aB, degree by degree. The weights are (x: 1, y: 0, z: 0)
/// refined by (z: 1).
PolarizationEmbedding polarization_embedding(const EmbeddingCertificate& base, std::size_t y, int d, int cap,
                                             const std::string& z_name = "z",
                                             const FieldConfig& field = FieldConfig::rationals());

/// Flag of subspaces of (A/D_L(a))_e per degree: the k-th member is spanned
/// by D_L(a_e) and the images of the first k monomials of the base order.
struct DistractionFiltration {
    FieldConfig field;
    RingPtr base;  ///< A/a
    std::vector<std::vector<Polynomial>> relations;  ///< D_L(a_e), per degree
    std::vector<std::vector<Polynomial>> flag;       ///< D_L(sigma_k), per degree, in order
};

/// The filtration transferred through D_L. L may only change row 0, and each
/// entry there must have a nonzero x_1 coefficient. Checks in_w(D_L(a)) = a
/// for w(x_1) = 1, w(others) = 0.
DistractionFiltration distraction_embedding(const EmbeddingCertificate& base, const DistractionMatrix& l,
                                            const FieldConfig& field = FieldConfig::rationals());

/// Linear-algebra version of the embedding check: for each (e, k), A_1 U_k +
/// D_L(a_{e+1}) must be the member of the next flag with the minimal growth
/// of A/a at (e, k).
std::optional<OrderViolation> check_filtration(const DistractionFiltration& f, int workers = 1);

struct ClExtendOptions {
    /// Ideals of B/(aB, z^t) pushed through stabilize_truncated and
    /// extend_embedding as a cross-check; 0 skips it.
    std::size_t verify_ideals = 200;
    std::optional<FieldConfig> field;
};

/// Embedding order on B/(aB, z^t) (t = nullopt for z free) from one on A/a.
/// Requires x^t in a for every variable.
GradedOrder clements_lindstrom_extend(const EmbeddingCertificate& base, std::optional<int> t, int cap,
                                      const ClExtendOptions& options = {}, const std::string& z_name = "z");

} // namespace hilbemb

#endif
