#pragma once

#include "rsid/error.hpp"
#include "rsid/gf.hpp"
#include "rsid/poly.hpp"
#include "rsid/insdel.hpp"
#include "rsid/rscode.hpp"
#include "rsid/certificate.hpp"
#include "rsid/analyze.hpp"
#include "rsid/construct.hpp"
#include "rsid/bounds.hpp"
#include "rsid/report.hpp"
