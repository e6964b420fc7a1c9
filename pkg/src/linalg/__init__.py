"""Dense exact linear algebra over one finite field."""
