# Tests for sd-enumerators
