#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Run the command line as a module:
    python -m km_satake validate --datum A2
"""

from .main import main

if __name__ == "__main__":
    main()
