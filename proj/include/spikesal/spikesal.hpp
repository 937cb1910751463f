// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_SPIKESAL_HPP
#define SPIKESAL_SPIKESAL_HPP

#include "spikesal/config.hpp"
#include "spikesal/convolve.hpp"
#include "spikesal/datasets.hpp"
#include "spikesal/image_io.hpp"
#include "spikesal/kernel.hpp"
#include "spikesal/metrics.hpp"
#include "spikesal/opponency.hpp"
#include "spikesal/oriented.hpp"
#include "spikesal/pipeline.hpp"
#include "spikesal/plane.hpp"
#include "spikesal/report.hpp"
#include "spikesal/saliency.hpp"
#include "spikesal/snn.hpp"
#include "spikesal/stimulus.hpp"
#include "spikesal/synthetic.hpp"

#endif  // SPIKESAL_SPIKESAL_HPP
