/* Single compilation unit for the vendored mlkem-native ML-KEM-768. */
#define MLK_CONFIG_FILE "../mlk_config.h"
#include "mlkem/mlkem_native_bcm.c"
