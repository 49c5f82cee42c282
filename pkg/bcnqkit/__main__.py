#!/usr/bin/env python
# Standard Library
import sys

# This Module
from bcnqkit.cli import main

sys.exit(main())
