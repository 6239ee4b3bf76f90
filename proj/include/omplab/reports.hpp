#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "omplab/counterexample.hpp"
#include "omplab/experiments.hpp"
#include "omplab/model.hpp"
#include "omplab/omp.hpp"
#include "omplab/rip.hpp"

namespace omplab {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// JSON uses 0-based indices throughout; only human-readable text output
// converts to 1-based.
ojson report_json(const Support& s);
ojson report_json(const SparseSignal& x);
ojson report_json(const RicReport& r);
ojson report_json(const OmpTrace& t);
ojson report_json(const Lemma1Report& r);
ojson report_json(const CounterexampleReport& r);
ojson report_json(const ExperimentConfig& c);
ojson report_json(const Theorem1Report& r);

struct Check {
    std::string name;
    ojson expected;
    ojson actual;
    double tolerance = 0.0; // NaN serializes as null (non-numeric check)
    bool passed = false;
};

struct VerificationReport {
    std::string command;
    ojson inputs;
    std::vector<Check> checks;

    bool overall() const;
};

ojson report_json(const VerificationReport& report, const ojson& payload);

// Top-level envelope shared by every command's JSON output.
ojson wrap_report(const std::string& command, const ojson& inputs,
                  const std::string& payload_key, const ojson& payload);

// The per-claim checks behind the counterexample command: delta, spectrum,
// eigenvalue multiplicity, tied correlations, and per-policy failure.
VerificationReport counterexample_verification(const CounterexampleReport& r);

inline constexpr double kDeltaCheckTol = 1e-10;
inline constexpr double kSpectrumCheckTol = 1e-10;
inline constexpr double kCorrelationCheckTol = 1e-12;

} // namespace omplab
