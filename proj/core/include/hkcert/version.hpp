#pragma once

namespace hkcert {

inline constexpr const char* kToolName = "hkcert";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kCsvFormatVersion = "hkcert-csv-1";

}  // namespace hkcert
