def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def missing_keys(record):
    if not 'id' in record or not 'name' in record:
        return 'missing'
    return 'complete'
