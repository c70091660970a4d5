#pragma once

#include "lafr/campaign.hpp"
#include "lafr/checks.hpp"
#include "lafr/corpus.hpp"
#include "lafr/error.hpp"
#include "lafr/exact/charpoly.hpp"
#include "lafr/exact/linear.hpp"
#include "lafr/exact/matrix.hpp"
#include "lafr/exact/number.hpp"
#include "lafr/exact/polynomial.hpp"
#include "lafr/graph/constructions.hpp"
#include "lafr/graph/graph.hpp"
#include "lafr/graph/io.hpp"
#include "lafr/oracle.hpp"
#include "lafr/report.hpp"
#include "lafr/revival.hpp"
#include "lafr/spectral.hpp"
