#include "omplab/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omplab {

ojson report_json(const Support& s)
{
    return ojson(s.indices());
}

ojson report_json(const SparseSignal& x)
{
    return ojson{
        {"length", x.length()},
        {"entries", x.entries},
        {"support", x.support.indices()},
    };
}

ojson report_json(const RicReport& r)
{
    return ojson{
        {"order", r.order},
        {"delta", r.delta},
        {"witness_support", r.witness_support.indices()},
        {"lambda_min", r.lambda_min},
        {"lambda_max", r.lambda_max},
        {"subsets_examined", r.subsets_examined},
    };
}

ojson report_json(const OmpTrace& t)
{
    ojson iterations = ojson::array();
    for (const auto& it : t.iterations) {
        iterations.push_back(ojson{
            {"selected_index", it.selected_index},
            {"correlation_values", it.correlation_values},
            {"tie_detected", it.tie_detected},
            {"residual_norm", it.residual_norm},
        });
    }
    return ojson{
        {"iterations", std::move(iterations)},
        {"final_estimate", report_json(t.final_estimate)},
        {"final_support", t.final_support.indices()},
        {"rank_deficient", t.rank_deficient},
    };
}

ojson report_json(const Lemma1Report& r)
{
    return ojson{
        {"s0", r.s0},
        {"max_off_support", r.max_off_support},
        {"eq2_lower_bound", r.eq2_lower_bound},
        {"eq1_upper_bound", r.eq1_upper_bound},
        {"condition_holds", r.condition_holds},
        {"conclusion_holds", r.conclusion_holds},
    };
}

ojson report_json(const CounterexampleReport& r)
{
    return ojson{
        {"k", r.k},
        {"delta_measured", r.delta_measured},
        {"delta_analytic", r.delta_analytic},
        {"spectrum", r.spectrum},
        {"correlations_at_y", r.correlations_at_y},
        {"omp_failed_under", r.omp_failed_under},
        {"omp_first_pick_tie", r.omp_first_pick_tie},
    };
}

ojson report_json(const ExperimentConfig& c)
{
    return ojson{
        {"seed", c.seed},
        {"trials", c.trials},
        {"m", c.m},
        {"n", c.n},
        {"sparsity", c.sparsity},
        {"ensemble", ensemble_name(c.ensemble)},
        {"tie_policy", c.tie_policy},
        {"signals_per_instance", c.signals_per_instance},
        {"budget", c.budget},
    };
}

ojson report_json(const Theorem1Report& r)
{
    ojson trials = ojson::array();
    for (const auto& t : r.trials) {
        trials.push_back(ojson{
            {"index", t.index},
            {"seed", t.seed},
            {"delta", t.outcome.delta},
            {"condition_holds", t.outcome.condition_holds},
            {"signals_tested", t.outcome.signals_tested},
            {"recovery_attempts", t.outcome.recovery_attempts},
            {"recovery_successes", t.outcome.recovery_successes},
            {"selected_in_support", t.outcome.selected_in_support},
            {"lemma1_ok", t.outcome.lemma1_ok},
        });
    }

    ojson summary{
        {"trials", static_cast<int>(r.trials.size())},
        {"condition_holds_count", r.condition_holds_count},
        {"condition_holds_fraction",
         r.trials.empty() ? 0.0
                          : static_cast<double>(r.condition_holds_count) /
                                static_cast<double>(r.trials.size())},
        {"recovery_attempts_on_condition", r.attempts_on_condition},
        {"recovery_successes_on_condition", r.successes_on_condition},
        {"selected_in_support_all", r.selected_in_support_all},
        {"lemma1_all_hold", r.lemma1_all_hold},
        {"overall", r.overall},
    };
    if (r.attempts_on_condition > 0)
        summary["recovery_success_rate"] = static_cast<double>(r.successes_on_condition) /
                                           static_cast<double>(r.attempts_on_condition);
    else
        summary["recovery_success_rate"] = nullptr;

    return ojson{
        {"config", report_json(r.config)},
        {"trials", std::move(trials)},
        {"summary", std::move(summary)},
    };
}

bool VerificationReport::overall() const
{
    for (const auto& check : checks)
        if (!check.passed)
            return false;
    return true;
}

namespace {

ojson check_json(const Check& c)
{
    ojson j{
        {"name", c.name},
        {"expected", c.expected},
        {"actual", c.actual},
    };
    if (std::isnan(c.tolerance))
        j["tolerance"] = nullptr;
    else
        j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    return j;
}

} // namespace

ojson report_json(const VerificationReport& report, const ojson& payload)
{
    ojson checks = ojson::array();
    for (const auto& c : report.checks)
        checks.push_back(check_json(c));
    return ojson{
        {"schema_version", kSchemaVersion},
        {"command", report.command},
        {"inputs", report.inputs},
        {"checks", std::move(checks)},
        {"overall", report.overall()},
        {"report", payload},
    };
}

ojson wrap_report(const std::string& command, const ojson& inputs,
                  const std::string& payload_key, const ojson& payload)
{
    return ojson{
        {"schema_version", kSchemaVersion},
        {"command", command},
        {"inputs", inputs},
        {payload_key, payload},
    };
}

VerificationReport counterexample_verification(const CounterexampleReport& r)
{
    constexpr double not_numeric = std::numeric_limits<double>::quiet_NaN();

    VerificationReport report;
    report.command = "counterexample";
    report.inputs = ojson{{"k", r.k}};

    {
        Check c;
        c.name = "delta_matches_analytic";
        c.expected = r.delta_analytic;
        c.actual = r.delta_measured;
        c.tolerance = kDeltaCheckTol;
        c.passed = std::abs(r.delta_measured - r.delta_analytic) <= kDeltaCheckTol;
        report.checks.push_back(std::move(c));
    }
    {
        const std::vector<double> expected = analytic_spectrum(r.k);
        double worst = std::numeric_limits<double>::infinity();
        bool ok = r.spectrum.size() == expected.size();
        if (ok) {
            worst = 0.0;
            for (std::size_t i = 0; i < expected.size(); ++i)
                worst = std::max(worst, std::abs(r.spectrum[i] - expected[i]));
            ok = worst <= kSpectrumCheckTol;
        }
        Check c;
        c.name = "spectrum_matches_analytic";
        c.expected = expected;
        c.actual = r.spectrum;
        c.tolerance = kSpectrumCheckTol;
        c.passed = ok;
        report.checks.push_back(std::move(c));
    }
    {
        int multiplicity = 0;
        for (double v : r.spectrum)
            if (std::abs(v - 1.0) <= kSpectrumCheckTol)
                ++multiplicity;
        Check c;
        c.name = "unit_eigenvalue_multiplicity";
        c.expected = r.k - 1;
        c.actual = multiplicity;
        c.tolerance = kSpectrumCheckTol;
        c.passed = multiplicity == r.k - 1;
        report.checks.push_back(std::move(c));
    }
    {
        double worst = 0.0;
        for (double v : r.correlations_at_y)
            worst = std::max(worst, std::abs(v - 1.0));
        Check c;
        c.name = "correlations_all_one";
        c.expected = 1.0;
        c.actual = r.correlations_at_y;
        c.tolerance = kCorrelationCheckTol;
        c.passed = static_cast<int>(r.correlations_at_y.size()) == r.k + 1 &&
                   worst <= kCorrelationCheckTol;
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "first_pick_tie_detected";
        c.expected = true;
        c.actual = r.omp_first_pick_tie;
        c.tolerance = not_numeric;
        c.passed = r.omp_first_pick_tie;
        report.checks.push_back(std::move(c));
    }
    const auto failed_under = [&r](const std::string& policy) {
        return std::find(r.omp_failed_under.begin(), r.omp_failed_under.end(), policy) !=
               r.omp_failed_under.end();
    };
    {
        Check c;
        c.name = "fails_under_highest_index";
        c.expected = true;
        c.actual = failed_under("highest");
        c.tolerance = not_numeric;
        c.passed = failed_under("highest");
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "fails_under_adversarial_off_support";
        c.expected = true;
        c.actual = failed_under("adversarial");
        c.tolerance = not_numeric;
        c.passed = failed_under("adversarial");
        report.checks.push_back(std::move(c));
    }
    {
        Check c;
        c.name = "above_sufficiency_threshold";
        c.expected = false;
        c.actual = theorem1_condition(r.delta_measured, r.k);
        c.tolerance = not_numeric;
        c.passed = !theorem1_condition(r.delta_measured, r.k);
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace omplab
