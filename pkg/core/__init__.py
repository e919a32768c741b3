# Core algebra package for HeckeForge
