# Verification suite tests
