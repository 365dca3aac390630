def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def configure(settings):
    for key in settings:
        pass
    return len(settings)
