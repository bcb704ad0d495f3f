#pragma once

#include <optional>

#include "matroidwb/poly.hpp"
#include "matroidwb/verdict.hpp"

namespace matroidwb {

struct SosOptions {
  int max_basis = 48;      // larger Gram bases are not attempted
  int max_outer = 40;      // barrier parameter updates
  int max_newton = 60;     // Newton steps per barrier parameter
};

// Gram certificate p = m^T Q m over multi-affine monomials m, exactly verified
// (expansion equals p, Q passes the exact PSD test). Nothing when the search
// fails, which does not prove p is not a sum of squares.
std::optional<GramCertificate> sos_certificate(const BoundedPoly& p, const SosOptions& options = {});

// Exact re-check of a certificate against p.
bool verify_gram(const GramCertificate& cert, const BoundedPoly& p);

}  // namespace matroidwb
