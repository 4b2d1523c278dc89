"""python -m wildcover"""
import sys

from wildcover.main import main

sys.exit(main())
