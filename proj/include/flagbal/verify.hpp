#pragma once

#include <string>
#include <vector>

#include "flagbal/report.hpp"

namespace flagbal {

struct VerifyResult
{
    bool ok = true;
    std::vector<std::string> failures;
    /// Extra data about the first failure, e.g. the failing subset of a regseq certificate.
    json details = json::object();

    void fail(std::string why)
    {
        ok = false;
        failures.push_back(std::move(why));
    }
};

/// Rechecks an emitted report from its JSON alone: the independent
/// certificates it carries are re-verified, and the report is recomputed from
/// its recorded input and options and compared key by key.
VerifyResult verify_report(const json& report);

} // namespace flagbal
