#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

// Training diverged (non-finite loss). Carries the step at which it happened.
class training_failure : public std::runtime_error {
public:
    training_failure(const std::string& what, long step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
    long step() const noexcept { return step_; }

private:
    long step_;
};

// A metric whose definition degenerates on the given input (e.g. FVU with
// zero-variance targets).
class undefined_metric : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pipeline: a required artifact is missing.
class dependency_error : public std::runtime_error {
public:
    explicit dependency_error(const std::string& artifact)
        : std::runtime_error("missing dependency artifact: " + artifact), artifact_(artifact) {}
    const std::string& artifact() const noexcept { return artifact_; }

private:
    std::string artifact_;
};

// Pipeline: an artifact on disk no longer matches the hash recorded when it
// was produced.
class stale_artifact : public std::runtime_error {
public:
    explicit stale_artifact(const std::string& artifact)
        : std::runtime_error("stale artifact (hash mismatch): " + artifact), artifact_(artifact) {}
    const std::string& artifact() const noexcept { return artifact_; }

private:
    std::string artifact_;
};

// Remote endpoint replied with something the client cannot interpret.
class protocol_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An experiment plan references something that is not set up (e.g. a selected
// latent without an explanation).
class configuration_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace srlab
