// acceptance checks; filled in last
