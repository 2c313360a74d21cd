#pragma once

#include <stdexcept>
#include <string>

namespace esnlm {

/// Base for all toolkit errors that carry a category usable in CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

/// Corpus file is unreadable or structurally malformed.
class CorpusFormatError : public Error {
public:
    explicit CorpusFormatError(const std::string& msg) : Error("corpus-format", msg) {}
};

/// Corpus content does not match the manifest (digest or token count).
class CorpusIntegrityError : public Error {
public:
    explicit CorpusIntegrityError(const std::string& msg) : Error("corpus-integrity", msg) {}
};

/// A token id is outside the declared vocabulary.
class VocabularyError : public Error {
public:
    explicit VocabularyError(const std::string& msg) : Error("vocabulary", msg) {}
};

/// Frozen-parameter initialization cannot proceed (e.g. zero spectral radius).
class InitializationError : public Error {
public:
    explicit InitializationError(const std::string& msg) : Error("initialization", msg) {}
};

class CheckpointError : public Error {
public:
    explicit CheckpointError(const std::string& msg) : Error("checkpoint", msg) {}
};

/// Non-finite value encountered during training; message names the tensor or batch.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error("numeric", msg) {}
};

} // namespace esnlm
