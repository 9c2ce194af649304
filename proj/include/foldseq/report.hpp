#pragma once

#include "foldseq/decomposition.hpp"
#include "foldseq/lamination.hpp"
#include "foldseq/measures.hpp"
#include "foldseq/metric.hpp"
#include "foldseq/progress.hpp"
#include "foldseq/walk.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fsq {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "num/den" strings; doubles as JSON numbers with 17
// significant digits, null when infinite.
Json rational_json(const Rational& q);
Json qvec_json(const QVec& v);
QVec qvec_from_json(const Json& j);
Json float_json(double x);

Json cone_json(const ConeApprox& c);
ConeApprox cone_from_json(const Json& j);
Json verdict_json(const ErgodicityVerdict& v);
Json language_json(const LanguageApprox& l);
Json complexity_json(const ComplexityProfile& p);
Json components_json(const ComponentReport& r);
Json decomposition_json(const TransverseDecomposition& d);
// Missing or mistyped fields of a decomposition report; empty when it conforms.
std::vector<std::string> decomposition_schema_errors(const Json& j);
Json recurrence_json(const RecurrenceReport& r);
Json distance_json(const LipschitzDistance& d);
Json candidates_json(const MarkedGraph& t, const std::vector<CandidateLoop>& cs);
Json factors_json(const std::vector<FreeFactor>& fs);
Json progress_json(const std::vector<HorizonPoint>& pts);
Json speed_json(const SpeedReport& r);
Json walk_json(const WalkRecord& r);

// Wraps a payload with the command name and format tag.
Json envelope(const std::string& command, Json payload);
std::string dump(const Json& j);

// CSV with a fixed column count; rows of the wrong width throw.
class Csv {
public:
    explicit Csv(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    std::string str() const { return text_; }
    static std::string num(double x);

private:
    size_t width_;
    std::string text_;
};

std::string cone_history_csv(const ConeApprox& c);
std::string complexity_csv(const ComplexityProfile& p);
std::string decomposition_csv(const TransverseDecomposition& d);
std::string progress_csv(const std::vector<HorizonPoint>& pts);
std::string speed_csv(const SpeedReport& r);
std::string walk_csv(const WalkRecord& r);

}  // namespace fsq
