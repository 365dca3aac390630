def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def status(online, busy):
    return 'away' if not online or not not busy else 'here'
