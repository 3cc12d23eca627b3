#ifndef HILBEMB_REPORT_HPP
#define HILBEMB_REPORT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbemb/io.hpp"

namespace hilbemb {

struct ClaimResult {
    std::string name;
    std::string operation;  ///< the single library operation that decides the claim
    std::string source;
    Json expected;
    Json actual;
    bool passed = false;

    Json to_json() const;
};

ClaimResult make_claim(std::string name, std::string operation, std::string source, Json expected, Json actual);

/// The single JSON document every CLI command prints.
class Report {
public:
    Report(std::string command, Json inputs);

    void set_results(Json results) { results_ = std::move(results); }
    void add_claim(ClaimResult c) { claims_.push_back(std::move(c)); }
    const std::vector<ClaimResult>& claims() const { return claims_; }
    bool passed() const;

    /// Keys are sorted, so the dump is byte-identical for equal inputs.
    Json to_json(std::optional<double> seconds = std::nullopt) const;

private:
    std::string command_;
    Json inputs_;
    Json results_ = Json::object();
    std::vector<ClaimResult> claims_;
};

struct RunOptions {
    std::size_t budget = 0;
    int workers = 1;
};

struct ExampleRecord {
    std::string id;
    std::string description;
    std::function<std::vector<ClaimResult>(const RunOptions&)> claims;
};

/// tensor-product, strongly-stable, grobner-flag, wxyz-embedding,
/// gotzmann-counterexample, cl-kk-grid.
const std::vector<ExampleRecord>& example_registry();

/// Throws PreconditionError for an unknown id.
Report run_example(const std::string& id, const RunOptions& options = {});

} // namespace hilbemb

#endif
