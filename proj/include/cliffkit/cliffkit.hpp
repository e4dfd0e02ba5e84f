#pragma once

#include "cliffkit/signature.hpp"
#include "cliffkit/multivector.hpp"
#include "cliffkit/text_format.hpp"
#include "cliffkit/oracle.hpp"
#include "cliffkit/identities.hpp"
#include "cliffkit/approx.hpp"
#include "cliffkit/report.hpp"
