// Certificate <-> JSON (stable schema, version field in every document).
//
// Integer fields that provably fit in 64 bits under the star-domain guard
// are emitted as JSON numbers; unbounded derived quantities (discriminant
// orders, uniform-bound values) travel inside check records as decimal
// strings.  Object keys are emitted in sorted order, so serialization is
// byte-deterministic.
#pragma once

#include "hkcert/certify.hpp"

#include <json.hpp>

#include <string>

namespace hkcert {

nlohmann::json certificate_to_json(const Certificate& cert);

// Throws HkError(MalformedCertificate) on missing/ill-typed fields.
Certificate certificate_from_json(const nlohmann::json& j);

std::string certificate_to_string(const Certificate& cert);  // 2-space indent, sorted keys
Certificate certificate_from_string(const std::string& text);

}  // namespace hkcert
