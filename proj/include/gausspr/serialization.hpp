#pragma once

#include <string>

#include "gausspr/laurent.hpp"
#include "gausspr/pipeline.hpp"
#include "gausspr/sharpness.hpp"
#include "json.hpp"

namespace gausspr {

using Json = nlohmann::json;

Json to_json(const SIFunction& f);
SIFunction sifunction_from_json(const Json& j);

Json to_json(const ZeroSet& z);
Json to_json(const FrameBounds& fb);
Json to_json(const FactorSpec& spec);
Json to_json(const RetrievalReport& rep);

Json to_json(const SampleSet& s);
SampleSet sampleset_from_json(const Json& j);

std::string phaseless_to_csv(const PhaselessSamples& m);
PhaselessSamples phaseless_from_csv(const std::string& text);

std::string sampleset_to_csv(const SampleSet& s);
SampleSet sampleset_from_csv(const std::string& text);

/// Decimal with 17 significant digits, round-trip exact.
std::string format_double(double v);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace gausspr
