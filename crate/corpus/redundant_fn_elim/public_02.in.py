def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def hook(name, value):
    ...

def configure(settings):
    for key in settings:
        hook(key, 1)
    return len(settings)
# probe: configure({'a': 1, 'b': 2})
