#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "embkit/errors.hpp"

namespace embkit {

// Dense f32 vectors with string identifiers, row-major. The universal
// currency of the pipeline.
struct EmbeddingMatrix {
    std::uint32_t dim = 0;
    std::uint64_t rows = 0;
    std::vector<float> data;          // rows * dim
    std::vector<std::string> ids;     // unique, size == rows
    bool normalized = false;

    std::span<const float> row(std::uint64_t r) const {
        return {data.data() + r * dim, dim};
    }
    std::span<float> row(std::uint64_t r) { return {data.data() + r * dim, dim}; }

    // Throws on any invariant violation (sizes, duplicate ids, non-finite
    // components, stale normalized flag).
    void validate() const;
};

struct QuantizedMatrix {
    std::uint32_t dim = 0;
    std::uint64_t rows = 0;
    std::vector<std::int8_t> data;
    std::vector<std::string> ids;
    float scale = 1.0f;  // single global scale, > 0
};

struct ScoredEntry {
    std::string id;
    double score;
};

// Entries sorted by (-score, id); no duplicate ids.
struct ScoredList {
    std::vector<ScoredEntry> entries;
};

using IdIndex = std::unordered_map<std::string, std::uint64_t>;
IdIndex build_id_index(const EmbeddingMatrix& m);

// Scales every row to unit L2 norm. ZeroVector if a row norm is < 1e-12.
EmbeddingMatrix normalize(const EmbeddingMatrix& m);

double cosine_sim(std::span<const float> a, std::span<const float> b);

// Keeps the first d components of every row; renormalize makes the result
// rows unit length (the retrieval default: truncated dot products stay on
// the cosine scale).
EmbeddingMatrix truncate(const EmbeddingMatrix& m, std::uint32_t d, bool renormalize = true);

// Dot-product scores of q against every row of m.
std::vector<double> dot_scores(std::span<const float> q, const EmbeddingMatrix& m);

// Exact top-k by dot product (cosine when m is normalized), ties broken by
// ascending id. Returns all rows when rows < k.
ScoredList topk(std::span<const float> q, const EmbeddingMatrix& m, std::size_t k);

// Symmetric int8 quantization with one global scale = max|x| / 127
// (scale 1 for an all-zero matrix). Round-trip error <= scale/2 per
// component.
QuantizedMatrix quantize_i8(const EmbeddingMatrix& m);
EmbeddingMatrix dequantize(const QuantizedMatrix& q);

// EMBX container: magic "EMBX", u32 version=1, u8 dtype (1=f32, 2=int8),
// u8 normalized flag, u32 dim, u64 rows, f32 scale (1.0 for f32), then
// row-major data, all little-endian. Ids live in a sidecar "<path>.ids"
// newline-delimited UTF-8 file with one id per row.
void write_embx(const EmbeddingMatrix& m, const std::filesystem::path& path);
void write_embx(const QuantizedMatrix& q, const std::filesystem::path& path);

std::variant<EmbeddingMatrix, QuantizedMatrix> read_embx(const std::filesystem::path& path);
EmbeddingMatrix read_embx_f32(const std::filesystem::path& path);
QuantizedMatrix read_embx_i8(const std::filesystem::path& path);

}  // namespace embkit
