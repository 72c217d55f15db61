#pragma once

// Umbrella header: week-wise behavioral pattern mining over phone call logs
// and detection of the recent window in which behavior stayed consistent.

#include "recency/call_record.hpp"
#include "recency/distribution.hpp"
#include "recency/errors.hpp"
#include "recency/generator.hpp"
#include "recency/log_io.hpp"
#include "recency/mining.hpp"
#include "recency/pipeline.hpp"
#include "recency/segmentation.hpp"
#include "recency/timestamp.hpp"
#include "recency/week_scan.hpp"
