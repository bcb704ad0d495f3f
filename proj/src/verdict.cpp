#include "matroidwb/verdict.hpp"

namespace matroidwb {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return "Holds";
    case Outcome::kFails:
      return "Fails";
    case Outcome::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

const char* certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kNone:
      return "None";
    case CertificateKind::kAllOnesExact:
      return "AllOnesExact";
    case CertificateKind::kCoefficientNonneg:
      return "CoefficientNonneg";
    case CertificateKind::kSOSGram:
      return "SOSGram";
    case CertificateKind::kSinglePairWagner:
      return "SinglePairWagner";
  }
  return "?";
}

BoundedPoly GramCertificate::expand() const {
  std::vector<BoundedPoly::Term> terms;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (gram[a][b] == 0) continue;
      Monomial prod;
      if (!multiply_monomials(basis[a], basis[b], prod)) {
        throw MatroidError(ErrorCode::kDegreeOverflow, "Gram basis product exceeds degree 2");
      }
      terms.emplace_back(prod, gram[a][b]);
    }
  }
  return BoundedPoly::from_terms(num_vars, std::move(terms));
}

}  // namespace matroidwb
