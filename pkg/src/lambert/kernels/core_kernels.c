/* Hot kernels for the multimodal encoder: fused scaled-dot-product attention
 * (forward never materializes the score matrix unless capture is requested;
 * backward recomputes probabilities slice-locally in cache), layer norm, GELU,
 * row softmax, embedding gather/scatter, cross entropy and a fused Adam step.
 *
 * float32 is the training path and uses a polynomial exp (rel. err < 1e-5);
 * float64 is the gradient-certification path and uses libm for accuracy.
 */

#include "core_kernels.h"

#include <math.h>
#include <stdlib.h>
#include <string.h>

#if defined(__SSE2__) || defined(__x86_64__)
#include <xmmintrin.h>
/* Flush denormals to zero on the calling thread. Shared libraries do not get
 * crtfastmath's FTZ setup, and the masked softmax lanes otherwise produce
 * denormal intermediates that cost ~100 cycles each. Left enabled on the
 * thread afterwards; this code never relies on gradual underflow. */
static inline void lambert_ftz(void) { _mm_setcsr(_mm_getcsr() | 0x8040); }
#else
static inline void lambert_ftz(void) {}
#endif

/* exp via 2^t with a degree-5 minimax polynomial on the fractional part.
 * Branchless and auto-vectorizable; inputs are max-subtracted so t <= 0. */
static inline float fast_expf(float x) {
  float t = x * 1.4426950408889634f;
  if (t < -126.0f) t = -126.0f;
  float fi = __builtin_floorf(t);
  float f = t - fi;
  float p = 1.3697664475809267e-2f;
  p = p * f + 5.1690358205939469e-2f;
  p = p * f + 2.4163844572498163e-1f;
  p = p * f + 6.9296612266139567e-1f;
  p = p * f + 1.0000037044659566f;
  int32_t ii = (int32_t)fi + 127;
  uint32_t bits = ((uint32_t)ii) << 23;
  float sc;
  memcpy(&sc, &bits, 4);
  return p * sc;
}

static inline float fast_tanhf(float x) {
  if (x > 9.0f) return 1.0f;
  if (x < -9.0f) return -1.0f;
  float e = fast_expf(-2.0f * (x > 0.0f ? x : -x));
  float t = (1.0f - e) / (1.0f + e);
  return x > 0.0f ? t : -t;
}

/* float32 instantiation */
#define KFLOAT float
#define KSUF(name) name##_f32
#define KEXP(x) fast_expf(x)
#define KTANH(x) fast_tanhf(x)
#define KLOG(x) logf(x)
#define KSQRT(x) sqrtf(x)
#include "kernels_impl.inc"
#undef KFLOAT
#undef KSUF
#undef KEXP
#undef KTANH
#undef KLOG
#undef KSQRT

/* float64 instantiation */
#define KFLOAT double
#define KSUF(name) name##_f64
#define KEXP(x) exp(x)
#define KTANH(x) tanh(x)
#define KLOG(x) log(x)
#define KSQRT(x) sqrt(x)
#include "kernels_impl.inc"
#undef KFLOAT
#undef KSUF
#undef KEXP
#undef KTANH
#undef KLOG
#undef KSQRT
