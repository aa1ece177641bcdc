#ifndef KMANB_KMANB_HPP
#define KMANB_KMANB_HPP

#include "kmanb/adaboost.hpp"
#include "kmanb/dataset.hpp"
#include "kmanb/encode.hpp"
#include "kmanb/eval.hpp"
#include "kmanb/feature_rank.hpp"
#include "kmanb/kmeans.hpp"
#include "kmanb/knn.hpp"
#include "kmanb/naive_bayes.hpp"
#include "kmanb/pipeline.hpp"
#include "kmanb/profiles.hpp"
#include "kmanb/random_forest.hpp"
#include "kmanb/rng.hpp"
#include "kmanb/serialize.hpp"
#include "kmanb/version.hpp"

#endif
