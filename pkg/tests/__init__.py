# Tests package for image-builder-mcp
