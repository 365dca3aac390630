def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def missing_keys(record):
    if not ('id' in record and 'name' in record):
        return 'missing'
    return 'complete'
# probe: missing_keys({'id': 1, 'name': 'x'})
# probe: missing_keys({'id': 1})
