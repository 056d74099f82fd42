#pragma once

#include <string>

#include "framefit/admissibility.hpp"
#include "framefit/frame.hpp"
#include "framefit/synthesis.hpp"

namespace framefit {

/// Named regression fixtures: "6.1", "6.2", "6.3", "6.6", "4.8", "6.7".
struct ExampleFixture {
    std::string name;
    OperatorModel op = FiniteHermitian(Mat(Mat::Identity(1, 1)));
    SequenceModel norms = SequenceModel::finite(Vec::Ones(1));
    Status expected = Status::Undetermined;
};

ExampleFixture example_fixture(const std::string& name);

/// Full pipeline on one fixture: classify, fixture-specific validations,
/// and construction plus verification when admissible.
struct ExampleReport {
    std::string name;
    Status expected = Status::Undetermined;
    AdmissibilityVerdict verdict;
    EvidenceList extra;       // fixture-specific validations
    bool has_frame = false;
    Mat synthesis;            // columns are the constructed vectors
    VerifyReport verify;      // valid when has_frame

    bool matches_expected() const { return verdict.status == expected; }
};

ExampleReport run_example(const std::string& name, long horizon = kDefaultHorizon,
                          double tol = kDefaultTol);

}  // namespace framefit
