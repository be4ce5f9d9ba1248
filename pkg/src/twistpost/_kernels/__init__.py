"""Scan-kernel selection: compiled extension when built, pure Python otherwise.

``TWISTPOST_PURE=1`` forces the Python kernels even when the extension is
present (useful for benchmarking and for differential tests).
"""

import os

if os.environ.get("TWISTPOST_PURE") == "1":
    from twistpost._kernels._pykernels import (  # noqa: F401
        IMPL,
        assoc_witness,
        braid_witness,
        left_scan,
        right_scan,
    )
else:
    try:
        from twistpost._kernels._ckernels import (  # noqa: F401
            IMPL,
            assoc_witness,
            braid_witness,
            left_scan,
            right_scan,
        )
    except ImportError:
        from twistpost._kernels._pykernels import (  # noqa: F401
            IMPL,
            assoc_witness,
            braid_witness,
            left_scan,
            right_scan,
        )
