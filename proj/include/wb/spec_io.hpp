#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "json.hpp"
#include "wb/gamma.hpp"
#include "wb/kernel.hpp"

namespace wb::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

// Directory for relative references plus a readable location for errors.
struct Where {
    fs::path dir;
    std::string at;
    Where operator/(const std::string& key) const { return {dir, at + "." + key}; }
    Where operator[](std::size_t i) const { return {dir, at + "[" + std::to_string(i) + "]"}; }
};

// Reads a JSON file; syntax errors become ParseError with line and column.
json read_json(const fs::path& file);
// Document and Where for a reference: a path string (relative to w.dir) or
// an inline object.
std::pair<json, Where> resolve(const json& ref, const Where& w);

// Structural parsing throws ParseError; semantic validation throws Failure.
AlgebraSpec algebra_spec(const json& j, const Where& w);
std::shared_ptr<const LocalAlgebra> load_algebra(const json& ref, const Where& w);
std::shared_ptr<const DField> load_dfield(const json& ref, const Where& w);
// `field` supplies the field when the spec has none, and must agree with it
// otherwise.
std::shared_ptr<const GammaSystem> load_gamma(const json& ref, const Where& w,
                                              std::shared_ptr<const DField> field = nullptr);
Kernel load_kernel(const json& ref, const Where& w);

// Fully inlined serializations.
json algebra_json(const LocalAlgebra& D);
json dfield_json(const DField& K);
json gamma_json(const GammaSystem& G);
json kernel_json(const Kernel& K);  // relations as the reduced basis

// Kind of a spec document: "algebra", "dfield", "gamma" or "kernel".
std::string spec_kind(const json& j, const Where& w);
// Canonical form; references stay as written, inline parts are normalized.
json canonical(const json& j, const Where& w);

std::string scalar_text(const Scalar& s);
std::string dump(const json& j);  // two-space indent, trailing newline

}  // namespace wb::io
