def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def neither(a, b):
    return not (a or b)
# probe: neither(False, False)
# probe: neither(True, False)
