# HeckeForge test suite
