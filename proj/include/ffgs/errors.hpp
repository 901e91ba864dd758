#pragma once

#include <stdexcept>
#include <string>

namespace ffgs {

// Library errors carry a stable code so the CLI can map them to exit codes
// and machine-readable reports.  Verifier failures are NOT errors; they come
// back as report entries.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code))
    {
    }
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error image_not_hopf(const std::string& m) { return Error("ImageNotHopf", m); }
inline Error not_flat(const std::string& m) { return Error("NotFlat", m); }
inline Error rank_mismatch(const std::string& m) { return Error("RankMismatch", m); }
inline Error not_hopf_ideal(const std::string& m) { return Error("NotHopfIdeal", m); }
inline Error model_mismatch(const std::string& m) { return Error("ModelMismatch", m); }
inline Error not_normal(const std::string& m) { return Error("NotNormal", m); }
inline Error witness_failure(const std::string& m) { return Error("WitnessFailure", m); }
inline Error schema_error(const std::string& m) { return Error("SchemaError", m); }
inline Error step_budget(const std::string& m) { return Error("StepBudget", m); }
inline Error unsupported(const std::string& m) { return Error("Unsupported", m); }

}  // namespace ffgs
