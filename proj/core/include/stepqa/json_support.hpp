#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stepqa/executor.hpp"
#include "stepqa/gateway.hpp"
#include "stepqa/metrics.hpp"
#include "stepqa/types.hpp"

namespace stepqa {

nlohmann::json to_json(const AnswerValue& v);
AnswerValue answer_value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Prediction& p);
Prediction prediction_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FinalAnswer& f);

nlohmann::json to_json(const EvalReport& r);

nlohmann::json to_json(const CompletionRecord& r);
CompletionRecord completion_record_from_json(const nlohmann::json& j);

// JSON-lines I/O: one object per line, UTF-8, '\n' separators. Blank lines
// are skipped on read. Throws IoError.
std::vector<nlohmann::json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<nlohmann::json>& rows);

}  // namespace stepqa
