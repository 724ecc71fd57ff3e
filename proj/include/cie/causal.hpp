#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "cie/types.hpp"

namespace cie::causal {

// --- binarized view ------------------------------------------------------------

enum class BinarizePolicyKind { median, fixed };

struct BinarizePolicy {
  BinarizePolicyKind kind = BinarizePolicyKind::median;
  double fixed_threshold = 0.0;

  static BinarizePolicy median() { return {}; }
  static BinarizePolicy fixed(double threshold) {
    return {BinarizePolicyKind::fixed, threshold};
  }
};

// One proxy feature split into treatment/control, the rest as covariates.
// `covariates` is standardized (zero mean, unit variance per column; constant
// columns become zeros); `raw_covariates` keeps the original scores for
// overlap diagnostics.
struct BinaryTreatmentView {
  int treatment_feature_id = 0;
  double threshold = 0.0;
  std::vector<int> t;  // 0/1 per row; 1 iff raw score > threshold
  std::vector<int> y;
  Eigen::MatrixXd covariates;
  Eigen::MatrixXd raw_covariates;
  std::vector<int> covariate_feature_ids;  // fixed order
  std::vector<ScaleBounds> covariate_scales;

  int rows() const { return static_cast<int>(t.size()); }
  int n_treated() const;
  int n_control() const;
};

BinaryTreatmentView binarize(const ObservationTable& table, int feature_id,
                             BinarizePolicy policy = BinarizePolicy::median());

// Median of a copy of `values`; even sizes average the middle pair.
double median_of(std::vector<double> values);

// --- base learners ------------------------------------------------------------

struct LinearModel {
  Eigen::VectorXd coefficients;
  double intercept = 0.0;

  double predict_one(const Eigen::VectorXd& x) const;
  Eigen::VectorXd predict(const Eigen::MatrixXd& xs) const;
};

// Closed-form ridge with an unpenalized intercept.
LinearModel fit_ridge(const Eigen::MatrixXd& xs, const Eigen::VectorXd& ys, double lambda);

// --- estimators ----------------------------------------------------------------

enum class Estimator { t_learner, s_learner, llm_estimated };
const char* to_string(Estimator estimator);
Estimator estimator_from_string(const std::string& s);

enum class BaseLearner { ridge, knn };
const char* to_string(BaseLearner base);
BaseLearner base_learner_from_string(const std::string& s);

struct EstimatorConfig {
  BaseLearner base = BaseLearner::ridge;
  double ridge_lambda = 1e-3;
  // Neighbors tied at the k-th distance are all included, so exact-duplicate
  // covariate strata are averaged rather than tie-broken arbitrarily.
  int knn_k = 5;
};

struct AteEstimate {
  int feature_id = 0;
  Estimator estimator = Estimator::t_learner;
  BaseLearner base_learner = BaseLearner::ridge;
  double value = 0.0;
  int n_treated = 0;
  int n_control = 0;
  int m = 0;
};

AteEstimate estimate_ate_tlearner(const BinaryTreatmentView& view, const EstimatorConfig& config = {});
AteEstimate estimate_ate_slearner(const BinaryTreatmentView& view, const EstimatorConfig& config = {});

// --- diagnostics ----------------------------------------------------------------

struct OverlapSummary {
  int feature_id = 0;  // the covariate
  std::array<int, 10> control_counts{};
  std::array<int, 10> treated_counts{};
  double overlap_coefficient = 0.0;  // sum of per-bin min of normalized histograms
};

std::vector<OverlapSummary> overlap_diagnostics(const BinaryTreatmentView& view);

// --- propensity score matching (off by default in the pipeline) -----------------

// Logistic propensity model fit by gradient descent (500 iterations, learning
// rate 0.1, zero init), then 1-NN matching without replacement within the
// caliper. Returns the matched subset with row payloads unchanged.
BinaryTreatmentView psm_adjust(const BinaryTreatmentView& view, double caliper = 0.05);

Eigen::VectorXd fit_propensity(const Eigen::MatrixXd& covariates, const std::vector<int>& t);

// --- full report ----------------------------------------------------------------

struct ReportConfig {
  Estimator estimator = Estimator::t_learner;
  EstimatorConfig base;
  BinarizePolicy policy;
  bool psm = false;
  double psm_caliper = 0.05;
};

struct AteReport {
  std::vector<AteEstimate> estimates;       // one per feature, feature_id order
  std::vector<std::string> feature_names;   // parallel to estimates
  double ate_overall = 0.0;                 // arithmetic mean of the estimates
  // Keyed by treatment feature id; one summary per covariate.
  std::map<int, std::vector<OverlapSummary>> diagnostics;
  ReportConfig config;

  nlohmann::json to_json() const;
  static AteReport from_json(const nlohmann::json& j);
  std::string digest() const;

  std::string overlap_csv() const;
};

AteReport estimate_all(const ObservationTable& table, const ReportConfig& config = {});

// Fails with positivity_violation naming the first feature whose median split
// leaves an empty group; run before estimation.
void check_positivity(const ObservationTable& table, BinarizePolicy policy = BinarizePolicy::median());

}  // namespace cie::causal
