#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "psamp/chain.hpp"
#include "psamp/dist.hpp"
#include "psamp/gallery.hpp"
#include "psamp/mixing.hpp"
#include "psamp/sampler.hpp"

namespace psamp {

// A chain loaded from a definition document: gallery kinds carry their exact
// reference stationary distribution, explicit matrices do not.
struct LoadedChain {
  std::shared_ptr<const ChainModel> chain;
  std::optional<FiniteDist> declared_pi;
  std::string kind;
};

// {"kind": <gallery name>, "params": {...}} or
// {"kind": "explicit", "matrix": [[[num,den], ...], ...]}.
LoadedChain load_chain(const nlohmann::json& doc);

// Reads a file path, or parses the text directly when it looks like an
// inline JSON object.
LoadedChain load_chain_text(const std::string& path_or_inline);

// Rationals appear in JSON as integers, "num/den" strings, or [num, den]
// pairs (numbers or decimal strings).
Rational rational_from_json(const nlohmann::json& j);
// Serialized as [numerator, denominator] decimal strings so arbitrary
// precision survives the round trip.
nlohmann::json rational_to_json(const Rational& q);

nlohmann::json dist_to_json(const FiniteDist& dist);

nlohmann::json certificate_to_json(const MixingCertificate& cert);
MixingCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SampleReport& report);

}  // namespace psamp
