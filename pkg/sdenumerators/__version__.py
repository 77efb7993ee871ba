#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

__version__ = "1.0.0"
__author__ = "The sd-enumerators authors"
__email__ = "sd-enumerators@users.noreply.github.com"
__license__ = "MIT"
__copyright__ = "Copyright 2026 The sd-enumerators authors"
