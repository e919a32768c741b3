# Command modules for the HeckeForge CLI
