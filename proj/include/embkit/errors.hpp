#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace embkit {

// Base class for all toolkit errors. `kind` is a stable machine-readable tag
// (the CLI prints it, tests match on it).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& id)
        : Error("ZeroVector", "vector has (near-)zero L2 norm: " + id) {}
};

struct DimMismatchError : Error {
    DimMismatchError(std::size_t a, std::size_t b)
        : Error("DimMismatch",
                "dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct BadDimError : Error {
    BadDimError(std::size_t d, std::size_t dim)
        : Error("BadDim", "requested dimension " + std::to_string(d) +
                              " out of range [1, " + std::to_string(dim) + "]") {}
};

struct ParseError : Error {
    ParseError(const std::string& file, std::uint64_t line, const std::string& msg)
        : Error("ParseError", file + ":" + std::to_string(line) + ": " + msg), line(line) {}
    std::uint64_t line;
};

struct NonContiguousRanksError : Error {
    NonContiguousRanksError(const std::string& file, std::uint64_t line, const std::string& msg)
        : Error("NonContiguousRanks", file + ":" + std::to_string(line) + ": " + msg) {}
};

struct DuplicateIdError : Error {
    DuplicateIdError(const std::string& file, std::uint64_t line, const std::string& id)
        : Error("DuplicateId", file + ":" + std::to_string(line) + ": duplicate record: " + id) {}
};

struct MissingVectorError : Error {
    explicit MissingVectorError(const std::string& id)
        : Error("MissingVector", "no embedding row for id: " + id) {}
};

struct PositiveNotScoredError : Error {
    PositiveNotScoredError(const std::string& query_id, const std::string& positive_id)
        : Error("PositiveNotScored",
                "positive document " + positive_id + " absent from teacher scores for query " + query_id) {}
};

struct InsufficientNegativesError : Error {
    InsufficientNegativesError(const std::string& query_id, std::size_t found, std::size_t wanted)
        : Error("InsufficientNegatives",
                "query " + query_id + ": only " + std::to_string(found) + " of " +
                    std::to_string(wanted) + " negatives survive the false-positive cutoff") {}
};

struct MissingScoresError : Error {
    explicit MissingScoresError(const std::string& query_id)
        : Error("MissingScores", "triplet for query " + query_id + " carries no negative scores") {}
};

struct BadPositiveIndexError : Error {
    BadPositiveIndexError(std::size_t row, std::size_t index, std::size_t cols)
        : Error("BadPositiveIndex", "row " + std::to_string(row) + ": positive index " +
                                        std::to_string(index) + " out of range (have " +
                                        std::to_string(cols) + " candidates)") {}
};

struct StepOutOfRangeError : Error {
    StepOutOfRangeError(std::uint64_t step, std::uint64_t total)
        : Error("StepOutOfRange",
                "step " + std::to_string(step) + " outside [0, " + std::to_string(total) + "]") {}
};

struct EmptyDatasetError : Error {
    EmptyDatasetError() : Error("EmptyDataset", "dataset contains no examples") {}
};

struct NonFiniteLossError : Error {
    NonFiniteLossError(std::uint64_t step, const std::string& detail)
        : Error("NonFiniteLoss", "training aborted at step " + std::to_string(step) + ": " + detail) {}
};

struct MissingCheckpointError : Error {
    explicit MissingCheckpointError(const std::string& path)
        : Error("MissingCheckpoint", "no checkpoint at " + path) {}
};

struct NoJudgedQueriesError : Error {
    NoJudgedQueriesError() : Error("NoJudgedQueries", "no run query has a relevant judged document") {}
};

struct ZeroBaselineError : Error {
    ZeroBaselineError() : Error("ZeroBaseline", "baseline mean is zero; retention undefined") {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("ConfigError", msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error("FormatError", msg) {}
};

}  // namespace embkit
