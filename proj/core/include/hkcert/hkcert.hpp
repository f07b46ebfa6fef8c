// Umbrella header.
#pragma once

#include "hkcert/certificate_json.hpp"
#include "hkcert/certify.hpp"
#include "hkcert/diophantine.hpp"
#include "hkcert/e8.hpp"
#include "hkcert/embeddings.hpp"
#include "hkcert/errors.hpp"
#include "hkcert/gram.hpp"
#include "hkcert/ints.hpp"
#include "hkcert/matrix.hpp"
#include "hkcert/squares.hpp"
#include "hkcert/version.hpp"
