def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def validate(record):
    """Validation is not implemented yet."""
    pass

def save(record):
    validate(record)
    return 'saved ' + record
# probe: save('r1')
