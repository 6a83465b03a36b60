#pragma once

#include <stdexcept>
#include <string>

namespace cfclass {

// Invalid or unparseable run configuration (CLI exit code 2).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data: missing columns, bad tokens, non-finite values
// (CLI exit code 3).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-fitting fold whose training complement cannot support the
// required nuisance fits (CLI exit code 4).
struct degenerate_fold_error : std::runtime_error {
    explicit degenerate_fold_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inference-time failures: singular KKT system, LICQ violation,
// negative variance beyond tolerance.
struct inference_error : std::runtime_error {
    explicit inference_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cfclass
