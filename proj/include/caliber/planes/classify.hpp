#pragma once

#include <map>
#include <string>
#include <vector>

#include "caliber/calib/plane.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/model/twistor.hpp"
#include "caliber/planes/report.hpp"

namespace caliber {

// Letter of structure p for special isotropic form names: 1, 2, 3 -> I, J, K.
char structure_letter(int p);

// Classifiers hold the forms relevant to planes of one degree; classify() is const and thread-safe.
class ConeClassifier {
 public:
  ConeClassifier(const HKModel& hk, int degree);
  ClassificationReport classify(const Plane& P, double tol, const std::string& id = "") const;

 private:
  const HKModel& hk_;
  int k_;
  std::map<std::string, AltForm> real_;
  std::map<std::string, CAltForm> complex_;
};

class LinkClassifier {
 public:
  LinkClassifier(const LinkFrame& L, int degree);
  ClassificationReport classify(const Plane& P, double tol, const std::string& id = "") const;

 private:
  const LinkFrame& L_;
  int k_;
  std::map<std::string, AltForm> real_;
  std::map<std::string, CAltForm> complex_;
};

class TwistorClassifier {
 public:
  TwistorClassifier(const TwistorModel& T, int degree);
  ClassificationReport classify(const Plane& P, double tol, const std::string& id = "") const;

 private:
  const TwistorModel& T_;
  int k_;
  std::map<std::string, AltForm> real_;
};

// Throws DimensionMismatch when the plane does not live in the model's tangent space.
ClassificationReport classify_plane(const Plane& P, const HKModel& hk, double tol = 1e-8, const std::string& id = "");
ClassificationReport classify_plane(const Plane& P, const LinkFrame& L, double tol = 1e-8, const std::string& id = "");
ClassificationReport classify_plane(const Plane& P, const TwistorModel& T, double tol = 1e-8,
                                    const std::string& id = "");

// Implications between classes, evaluated from the flags and values of a report.
std::vector<EquivalenceCheck> equivalences_from_report(const ClassificationReport& r);

std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const HKModel& hk, double tol = 1e-8);
std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const LinkFrame& L, double tol = 1e-8);
std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const TwistorModel& T, double tol = 1e-8);

// Helpers shared with the normal form code.
// Largest singular value of (1 - P) J U over the frame U of P.
double invariance_residual(const Matrix& J, const Plane& P);
// Number of singular values above tol.
int numeric_rank(const Matrix& M, double tol);

}  // namespace caliber
