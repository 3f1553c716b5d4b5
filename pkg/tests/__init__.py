# Tests for kahler-qm
